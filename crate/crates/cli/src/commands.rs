//! Command implementations. Each returns the exact stdout payload so the
//! selftest can re-run commands in-process and compare bytes; timings and
//! progress notes go to stderr only.

use anyhow::{anyhow, bail, Context, Result};
use polyapprox::geom::PointPolytope;
use polyapprox::minkowski::{
    approx_width, bronshteyn_ivanov_sum, dudley_sum, Representation,
};
use polyapprox::sum::SumBody;
use polyapprox::width_index::{BuildParams, WidthIndex, CALIBRATION};
use polyapprox::Verdict;
use polyapprox_oracles::acceptance;
use polyapprox_oracles::gen::{generate, generate_pair, InstanceKind, InstanceSpec};
use polyapprox_oracles::io::{
    parse_pair, parse_polytope, svg_render_2d, to_json, IndexJson, PairJson, PolytopeJson,
};
use polyapprox_oracles::report::{CriterionResult, OracleReport};
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumAlgo {
    Dudley,
    Bi,
}

pub struct GenArgs {
    pub kind: InstanceKind,
    pub dim: usize,
    pub n: usize,
    pub seed: u64,
    pub margin: Option<f64>,
    pub eps: Option<f64>,
}

pub fn cmd_gen(args: &GenArgs) -> Result<String> {
    let spec = InstanceSpec {
        kind: args.kind,
        dim: args.dim,
        n: args.n,
        seed: args.seed,
        margin: args.margin,
        eps: args.eps,
    };
    match args.kind {
        InstanceKind::NearTouchingPair => {
            let pair = generate_pair(&spec);
            Ok(to_json(&PairJson {
                a: PolytopeJson::from_points(&pair.a),
                b: PolytopeJson::from_points(&pair.b),
                certificate: Some(pair.certificate),
            }))
        }
        _ => {
            let inst = generate(&spec);
            Ok(to_json(&PolytopeJson::from_points(&inst.polytope)))
        }
    }
}

fn load_points(text: &str, what: &str) -> Result<PointPolytope> {
    parse_polytope(text)
        .with_context(|| format!("reading {what}"))?
        .into_points()
        .with_context(|| format!("{what} must be a point-representation polytope"))
}

pub fn cmd_build(text: &str, eps: f64, net_constant: f64, buckets: bool) -> Result<String> {
    let p = load_points(text, "input polytope")?;
    let mut params = BuildParams::new(eps);
    params.net_constant = net_constant;
    params.buckets = buckets;
    let idx = WidthIndex::build_with(&p, &params)?;
    Ok(to_json(&IndexJson::from_index(&idx)))
}

#[derive(Serialize)]
struct KernelOut {
    dim: usize,
    n: usize,
    eps: f64,
    size: usize,
    indices: Vec<u32>,
}

pub fn cmd_kernel(text: &str, eps: f64, net_constant: f64) -> Result<String> {
    let p = load_points(text, "input polytope")?;
    let mut params = BuildParams::new(eps);
    params.net_constant = net_constant;
    let idx = WidthIndex::build_with(&p, &params)?;
    Ok(to_json(&KernelOut {
        dim: p.dim(),
        n: p.len(),
        eps,
        size: idx.kernel_size(),
        indices: idx.kernel_indices().to_vec(),
    }))
}

#[derive(Serialize)]
struct FrameOut {
    r: f64,
    lambda: f64,
    beta: Option<f64>,
    alpha: Option<f64>,
}

#[derive(Serialize)]
struct IntersectOut {
    verdict: &'static str,
    envelope_min: Option<f64>,
    evaluations: u64,
    frame: Option<FrameOut>,
}

/// Loads the (A, B) operands from one pair file or two polytope files.
pub fn load_operands(inputs: &[String]) -> Result<(PointPolytope, PointPolytope)> {
    match inputs {
        [single] => {
            let pair: PairJson = parse_pair(single).context("reading pair file")?;
            Ok((
                pair.a.into_points().context("pair operand a")?,
                pair.b.into_points().context("pair operand b")?,
            ))
        }
        [a, b] => Ok((load_points(a, "operand a")?, load_points(b, "operand b")?)),
        _ => bail!("expected one pair file or two polytope files via --in"),
    }
}

pub fn cmd_intersect(inputs: &[String], eps: f64) -> Result<String> {
    let (a, b) = load_operands(inputs)?;
    let ia = WidthIndex::build(&a, eps / CALIBRATION)?;
    let ib = WidthIndex::build(&b, eps / CALIBRATION)?;
    let ans = polyapprox::approx_intersect(&ia, &ib, None, None, eps)?;
    let frame = ans.frame.as_ref().map(|f| FrameOut {
        r: f.r,
        lambda: f.lambda,
        beta: if f.beta.is_finite() { Some(f.beta) } else { None },
        alpha: if f.alpha.is_finite() { Some(f.alpha) } else { None },
    });
    Ok(to_json(&IntersectOut {
        verdict: match ans.verdict {
            Verdict::Intersecting => "intersecting",
            Verdict::Disjoint => "disjoint",
        },
        envelope_min: ans.envelope_min,
        evaluations: ans.evaluations,
        frame,
    }))
}

pub fn cmd_minksum(
    inputs: &[String],
    eps: f64,
    algo: SumAlgo,
    format: OutputFormat,
) -> Result<String> {
    let (a, b) = load_operands(inputs)?;
    let ia = WidthIndex::build(&a, eps / CALIBRATION)?;
    let ib = WidthIndex::build(&b, eps / CALIBRATION)?;
    let mut sum = SumBody::new(a.dim());
    sum.push_index(&ia, None, false)?;
    sum.push_index(&ib, None, false)?;
    let rep = match algo {
        SumAlgo::Dudley => Representation::Halfspaces(dudley_sum(&sum, eps)?),
        SumAlgo::Bi => Representation::Points(bronshteyn_ivanov_sum(&sum, eps, false)?),
    };
    match format {
        OutputFormat::Json => Ok(to_json(&PolytopeJson::from_representation(&rep))),
        OutputFormat::Svg => Ok(svg_render_2d(&rep)?),
    }
}

#[derive(Serialize)]
struct WidthOut {
    width: f64,
    direction: Vec<f64>,
    facets: usize,
    eps: f64,
}

pub fn cmd_width(text: &str, eps: f64) -> Result<String> {
    let p = load_points(text, "input polytope")?;
    let est = approx_width(&p, eps)?;
    Ok(to_json(&WidthOut {
        width: est.width,
        direction: est.direction,
        facets: est.facets,
        eps,
    }))
}

#[derive(Serialize)]
struct BenchPoint {
    eps: f64,
    kernel_size: usize,
    dudley_facets: usize,
}

#[derive(Serialize)]
struct BenchOut {
    dim: usize,
    n: usize,
    seed: u64,
    parallel: bool,
    sweep: Vec<BenchPoint>,
}

/// Kernel- and output-size sweep over a fixed eps grid. Sizes go to stdout;
/// wall-clock timings are printed to stderr so the payload stays
/// byte-identical across runs.
pub fn cmd_bench(dim: usize, n: usize, seed: u64) -> Result<String> {
    let inst = generate(&InstanceSpec {
        kind: InstanceKind::SphereShell,
        dim,
        n,
        seed,
        margin: None,
        eps: None,
    });
    let grid = [0.08, 0.04, 0.02, 0.01, 0.005];
    let mut sweep = Vec::new();
    for &eps in &grid {
        let t0 = Instant::now();
        let idx = WidthIndex::build(&inst.polytope, eps)?;
        let build_s = t0.elapsed().as_secs_f64();
        let t1 = Instant::now();
        let idx_cal = WidthIndex::build(&inst.polytope, eps / CALIBRATION)?;
        let mut sum = SumBody::new(dim);
        sum.push_index(&idx_cal, None, false)?;
        let h = dudley_sum(&sum, eps)?;
        let dudley_s = t1.elapsed().as_secs_f64();
        eprintln!(
            "eps {:>6}: kernel {} ({build_s:.3}s), dudley facets {} ({dudley_s:.3}s)",
            eps,
            idx.kernel_size(),
            h.len()
        );
        sweep.push(BenchPoint {
            eps,
            kernel_size: idx.kernel_size(),
            dudley_facets: h.len(),
        });
    }
    Ok(to_json(&BenchOut {
        dim,
        n,
        seed,
        parallel: polyapprox::exec::parallel_enabled(),
        sweep,
    }))
}

/// Full acceptance suite plus the in-process output-determinism criterion.
pub fn cmd_selftest(quick: bool) -> Result<String> {
    let mut report = acceptance::run_all(quick);
    for c in &report.criteria {
        eprintln!("{} [{:.1}s]", c.line(), c.seconds);
    }
    let det = criterion_9_determinism()?;
    eprintln!("{} [{:.1}s]", det.line(), det.seconds);
    report.criteria.push(det);
    let report = OracleReport::new(report.criteria);
    Ok(to_json(&report))
}

/// Criterion 9: every command with a fixed seed produces byte-identical
/// output across two in-process runs.
pub fn criterion_9_determinism() -> Result<CriterionResult> {
    let started = Instant::now();
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut note = String::new();

    let mut compare = |name: &str, run: &dyn Fn() -> Result<String>| -> Result<()> {
        let first = run()?;
        let second = run()?;
        checks += 1;
        if first != second {
            violations += 1;
            if note.is_empty() {
                note = format!("first divergence: {name}");
            }
        }
        Ok(())
    };

    for kind in [
        InstanceKind::SphereShell,
        InstanceKind::RotatedBox,
        InstanceKind::Simplex,
        InstanceKind::RandomHull,
        InstanceKind::NearTouchingPair,
    ] {
        compare("gen", &|| {
            cmd_gen(&GenArgs {
                kind,
                dim: 2,
                n: 40,
                seed: 7,
                margin: Some(1.5),
                eps: Some(0.05),
            })
        })?;
    }
    let poly = cmd_gen(&GenArgs {
        kind: InstanceKind::SphereShell,
        dim: 2,
        n: 120,
        seed: 11,
        margin: None,
        eps: None,
    })?;
    let pair = cmd_gen(&GenArgs {
        kind: InstanceKind::NearTouchingPair,
        dim: 2,
        n: 16,
        seed: 13,
        margin: Some(2.0),
        eps: Some(0.1),
    })?;
    compare("build", &|| cmd_build(&poly, 0.05, 0.5, false))?;
    compare("kernel", &|| cmd_kernel(&poly, 0.05, 0.5))?;
    compare("intersect", &|| cmd_intersect(std::slice::from_ref(&pair), 0.1))?;
    compare("minksum-dudley", &|| {
        cmd_minksum(
            &[poly.clone(), poly.clone()],
            0.1,
            SumAlgo::Dudley,
            OutputFormat::Json,
        )
    })?;
    compare("minksum-bi", &|| {
        cmd_minksum(
            &[poly.clone(), poly.clone()],
            0.1,
            SumAlgo::Bi,
            OutputFormat::Svg,
        )
    })?;
    compare("width", &|| cmd_width(&poly, 0.1))?;
    compare("bench", &|| cmd_bench(2, 500, 3))?;

    Ok(CriterionResult {
        id: 9,
        name: "byte-identical command output".into(),
        passed: violations == 0,
        checks,
        violations,
        constants: BTreeMap::new(),
        details: note,
        seconds: started.elapsed().as_secs_f64(),
    })
}

pub fn parse_format(s: &str) -> Result<OutputFormat> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "svg" => Ok(OutputFormat::Svg),
        other => Err(anyhow!("unknown format '{other}' (expected json|svg)")),
    }
}

pub fn parse_algo(s: &str) -> Result<SumAlgo> {
    match s {
        "dudley" => Ok(SumAlgo::Dudley),
        "bi" => Ok(SumAlgo::Bi),
        other => Err(anyhow!("unknown algorithm '{other}' (expected dudley|bi)")),
    }
}
