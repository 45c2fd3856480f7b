//! Command implementations. Each returns the JSON text to emit.

use std::io::Read;
use std::path::Path;

use fn3_core::gluing::{assemble_from_pants, extract_fn};
use fn3_core::linalg::{
    adj, check_unimodular, classify, det, eigen3, tr, trace_test, EigenTriple, Vec3, CLASSIFY_TOL,
    UNIMODULAR_TOL,
};
use fn3_core::pants::{build_pants, goldman_pants, PantsRep, RhoCPath};
use fn3_core::real_forms::{
    cross_ratios, detect_pants, detect_surface, goldman_boundary_to_traces, pp_linear_system, pp_system,
    traces_to_goldman_boundary, zhang_sigma, GoldmanParams, PpTraces,
};
use fn3_core::trace_algebra::{reducibility_test, shape_invariants, Reducibility, TraceCoordsY};
use fn3_core::Error as CoreError;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::dto::*;
use crate::error::{CliError, Result};
use crate::suites::{self, SuiteReport};

/// Envelope of every report: producer, version and the full run config.
#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: RunConfig,
    pub result: T,
}

/// What a command produced. `failed` is set when a verification failed
/// after its report was written.
pub struct Outcome {
    pub text: String,
    pub failed: Option<String>,
}

fn emit<T: Serialize>(command: &str, cfg: &RunConfig, result: T) -> Result<Outcome> {
    let report = Report {
        tool: "fn3",
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        config: cfg.clone(),
        result,
    };
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| CliError::Input(e.to_string()))?;
    text.push('\n');
    Ok(Outcome { text, failed: None })
}

/// Reads and parses a JSON file; `-` reads standard input.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

#[derive(Debug, Serialize)]
struct TraceTestDto {
    strongly_loxodromic: bool,
    self_conjugate: bool,
    indeterminate: bool,
    #[serde(rename = "F")]
    f: Cx,
}

#[derive(Debug, Serialize)]
struct ClassifyDto {
    class: &'static str,
    determinant: Cx,
    trace: Cx,
    trace_inv: Cx,
    eigenvalues: [Cx; 3],
    moduli: [f64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvectors: Option<[[Cx; 3]; 3]>,
    trace_test: TraceTestDto,
}

pub fn classify_cmd(path: &Path, cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let m = read_json::<MatDto>(path)?.to_mat();
    check_unimodular(&m, cfg.tol("unimodular", UNIMODULAR_TOL))?;
    let class = classify(&m, cfg.tol("classify", CLASSIFY_TOL));
    let ev = fn3_core::linalg::eigenvalues(&m);
    let (t, ti) = (tr(&m), tr(&adj(&m)));
    let tt = trace_test(t, ti);
    let vectors = eigen3(&m, 1e-9)
        .ok()
        .map(|e: EigenTriple| e.vectors.map(|v: Vec3| [Cx(v[0]), Cx(v[1]), Cx(v[2])]));
    emit(
        "classify",
        cfg,
        ClassifyDto {
            class: class.name(),
            determinant: Cx(det(&m)),
            trace: Cx(t),
            trace_inv: Cx(ti),
            eigenvalues: ev.map(Cx),
            moduli: ev.map(|z| z.norm()),
            eigenvectors: vectors,
            trace_test: TraceTestDto {
                strongly_loxodromic: tt.strongly_loxodromic,
                self_conjugate: tt.self_conjugate,
                indeterminate: tt.indeterminate,
                f: Cx(tt.f),
            },
        },
    )
}

#[derive(Debug, Serialize)]
struct BuildDto {
    pants: PantsDto,
    solver: SolverDto,
}

pub fn pants_build(path: &Path, cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let y = read_json::<CoordsDto>(path)?.to_coords();
    let (p, report) = build_pants(&y, cfg.seed)?;
    emit(
        "pants build",
        cfg,
        BuildDto {
            pants: (&p).into(),
            solver: (&report).into(),
        },
    )
}

#[derive(Debug, Serialize)]
struct QuadraticDto {
    #[serde(rename = "S")]
    s: Cx,
    #[serde(rename = "P")]
    p: Cx,
    roots: [Cx; 2],
    discriminant: Cx,
    commutator: Cx,
}

#[derive(Debug, Serialize)]
struct CoordsReportDto {
    coords: CoordsDto,
    shape: ShapeDto,
    quadratic: QuadraticDto,
    verdict: VerdictDto,
    branch: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    relation_residual: Option<f64>,
}

pub fn pants_coords_cmd(path: &Path, cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let (y, rep): (TraceCoordsY, Option<PantsRep>) = match read_json::<PantsInput>(path)? {
        PantsInput::Matrices(m) => {
            let p = m.to_pants();
            for g in [&p.a, &p.b] {
                check_unimodular(g, cfg.tol("unimodular", UNIMODULAR_TOL))?;
            }
            (p.coords, Some(p))
        }
        PantsInput::Coords(c) => (c.to_coords(), None),
    };
    let tol = cfg.tol("detect", 1e-8);
    let q = y.quadratic();
    let branch = match reducibility_test(&y, tol) {
        Reducibility::ReducibleBranch => "ReducibleBranch",
        Reducibility::IrreducibleBranch => "IrreducibleBranch",
        Reducibility::NotSelfPaired => "NotSelfPaired",
    };
    emit(
        "pants coords",
        cfg,
        CoordsReportDto {
            coords: (&y).into(),
            shape: (&y.shape()).into(),
            quadratic: QuadraticDto {
                s: Cx(q.s),
                p: Cx(q.p),
                roots: [Cx(q.roots.0), Cx(q.roots.1)],
                discriminant: Cx(q.discriminant()),
                commutator: Cx(y.commutator()),
            },
            verdict: (&detect_pants(&y, tol)).into(),
            branch,
            irreducible: rep.as_ref().map(|p| p.irreducible),
            relation_residual: rep.as_ref().map(|p| p.relation_residual()),
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceAction {
    Build,
    Check,
    Coords,
}

fn assemble(file: &DecompositionFile, cfg: &RunConfig) -> Result<fn3_core::gluing::SurfaceRep> {
    let d = file.decomposition();
    d.validate()?;
    let mut pants = Vec::with_capacity(file.pants.len());
    for (id, p) in file.pants.iter().enumerate() {
        let wrap = |e: CoreError| CoreError::Pants { id, source: Box::new(e) };
        pants.push(match p {
            PantsInput::Matrices(m) => m.to_pants(),
            PantsInput::Coords(c) => {
                let seed = cfg.seed.wrapping_add((id as u64).wrapping_mul(0x9e37_79b9));
                build_pants(&c.to_coords(), seed).map_err(wrap)?.0
            }
        });
    }
    Ok(assemble_from_pants(&d, pants)?)
}

#[derive(Debug, Serialize)]
struct RelationRow {
    name: String,
    residual: f64,
}

#[derive(Debug, Serialize)]
struct GeneratorRow {
    name: String,
    trace: Cx,
    trace_inv: Cx,
}

#[derive(Debug, Serialize)]
struct CheckDto {
    max_relation_residual: f64,
    relations: Vec<RelationRow>,
    generators: Vec<GeneratorRow>,
}

#[derive(Debug, Serialize)]
struct SurfaceCoordsDto {
    record: FnRecordDto,
    verdict: VerdictDto,
}

pub fn surface_cmd(action: SurfaceAction, path: &Path, cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let file: DecompositionFile = read_json(path)?;
    let rep = assemble(&file, cfg)?;
    match action {
        SurfaceAction::Build => emit("surface build", cfg, SurfaceDto::from(&rep)),
        SurfaceAction::Check => {
            let relations: Vec<RelationRow> = rep
                .relation_residuals()
                .into_iter()
                .map(|(name, residual)| RelationRow { name, residual })
                .collect();
            let generators = rep
                .generators()
                .into_iter()
                .map(|(name, g)| GeneratorRow {
                    name,
                    trace: Cx(tr(&g)),
                    trace_inv: Cx(tr(&adj(&g))),
                })
                .collect();
            emit(
                "surface check",
                cfg,
                CheckDto {
                    max_relation_residual: rep.max_relation_residual(),
                    relations,
                    generators,
                },
            )
        }
        SurfaceAction::Coords => {
            let rec = extract_fn(&rep)?;
            emit(
                "surface coords",
                cfg,
                SurfaceCoordsDto {
                    verdict: (&detect_surface(&rec, cfg.tol("detect", 1e-8))).into(),
                    record: (&rec).into(),
                },
            )
        }
    }
}

#[derive(Debug, Serialize)]
struct VerifyDto {
    passed: bool,
    suites: Vec<SuiteReport>,
}

/// Runs `name` (or every suite for `all`).
pub fn verify(name: &str, cfg: &RunConfig) -> Result<Outcome> {
    let names: Vec<&str> = if name == "all" {
        suites::suite_names().collect()
    } else {
        vec![name]
    };
    let mut reports = Vec::new();
    for n in names {
        reports.push(suites::run_suite(n, cfg)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let mut out = emit("verify", cfg, VerifyDto { passed, suites: reports })?;
    if !passed {
        out.failed = Some(name.to_string());
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertKind {
    Goldman,
    PpCross,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GoldmanInput {
    Params {
        a: [f64; 2],
        b: [f64; 2],
        c: [f64; 2],
        s: f64,
        r: f64,
    },
    Boundary {
        lambda: f64,
        tau: f64,
    },
    Traces {
        trace: Cx,
        trace_inv: Cx,
    },
}

#[derive(Debug, Serialize)]
struct GoldmanPantsDto {
    pants: PantsDto,
    rho_c_printed: f64,
    rho_c_derived: f64,
    rho_c_used: &'static str,
    printed_trace_gap: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy: Option<f64>,
    zhang_sigma: ShapeDto,
    direct_sigma: ShapeDto,
}

#[derive(Debug, Deserialize)]
struct PpTracesDto {
    ba: Cx,
    ainv_binv: Cx,
    ainv_b: Cx,
    binv_a: Cx,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PpInput {
    Pair {
        #[serde(rename = "A")]
        a: MatDto,
        #[serde(rename = "B")]
        b: MatDto,
    },
    Linear {
        eigen_a: [Cx; 3],
        eigen_b: [Cx; 3],
        traces: PpTracesDto,
    },
}

#[derive(Debug, Serialize)]
struct CrossRatiosDto {
    #[serde(rename = "X1")]
    x1: Cx,
    #[serde(rename = "X2")]
    x2: Cx,
    #[serde(rename = "X3")]
    x3: Cx,
    degenerate: bool,
    falbel_residuals: [f64; 2],
    linear_system: LinearDto,
}

#[derive(Debug, Serialize)]
struct LinearDto {
    #[serde(rename = "X1")]
    x1: Cx,
    #[serde(rename = "X2")]
    x2: Cx,
    delta: Cx,
}

fn triple(values: [Cx; 3]) -> EigenTriple {
    EigenTriple {
        values: values.map(|z| z.0),
        vectors: [Vec3::zeros(); 3],
    }
}

pub fn convert(kind: ConvertKind, path: &Path, cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    match kind {
        ConvertKind::Goldman => match read_json::<GoldmanInput>(path)? {
            GoldmanInput::Boundary { lambda, tau } => {
                let (t, ti) = goldman_boundary_to_traces(lambda, tau);
                emit(
                    "convert goldman",
                    cfg,
                    serde_json::json!({ "trace": Cx(t), "trace_inv": Cx(ti) }),
                )
            }
            GoldmanInput::Traces { trace, trace_inv } => {
                let (lambda, tau) = traces_to_goldman_boundary(trace.0, trace_inv.0)?;
                emit("convert goldman", cfg, serde_json::json!({ "lambda": lambda, "tau": tau }))
            }
            GoldmanInput::Params { a, b, c, s, r } => {
                let p = GoldmanParams { a, b, c, s, r };
                let (rep, report) = goldman_pants(&p, true)?;
                let gap = report.discrepancy();
                emit(
                    "convert goldman",
                    cfg,
                    GoldmanPantsDto {
                        pants: (&rep).into(),
                        rho_c_printed: report.rho_c_printed,
                        rho_c_derived: report.rho_c_derived,
                        rho_c_used: match report.used {
                            RhoCPath::Printed => "printed",
                            RhoCPath::RelationDerived => "relation-derived",
                        },
                        printed_trace_gap: report.printed_trace_gap,
                        discrepancy: (gap > cfg.tol("rho_c", 1e-8)).then_some(gap),
                        zhang_sigma: (&zhang_sigma(&p)).into(),
                        direct_sigma: (&shape_invariants(&rep.a, &rep.b)).into(),
                    },
                )
            }
        },
        ConvertKind::PpCross => match read_json::<PpInput>(path)? {
            PpInput::Pair { a, b } => {
                let (a, b) = (a.to_mat(), b.to_mat());
                let x = cross_ratios(&a, &b)?;
                let (ea, eb) = (eigen3(&a, 1e-9)?, eigen3(&b, 1e-9)?);
                let t = PpTraces::of(&a, &b);
                let (x1, x2) = pp_linear_system(&ea, &eb, &t)?;
                let (_, _, delta) = pp_system(&ea.values, &eb.values, &t);
                let (f1, f2) = x.falbel_residuals();
                emit(
                    "convert ppcross",
                    cfg,
                    CrossRatiosDto {
                        x1: Cx(x.x1),
                        x2: Cx(x.x2),
                        x3: Cx(x.x3),
                        degenerate: x.degenerate,
                        falbel_residuals: [f1, f2],
                        linear_system: LinearDto {
                            x1: Cx(x1),
                            x2: Cx(x2),
                            delta: Cx(delta),
                        },
                    },
                )
            }
            PpInput::Linear { eigen_a, eigen_b, traces } => {
                let (ea, eb) = (triple(eigen_a), triple(eigen_b));
                let t = PpTraces {
                    ba: traces.ba.0,
                    ainv_binv: traces.ainv_binv.0,
                    ainv_b: traces.ainv_b.0,
                    binv_a: traces.binv_a.0,
                };
                let (x1, x2) = pp_linear_system(&ea, &eb, &t)?;
                let (_, _, delta) = pp_system(&ea.values, &eb.values, &t);
                emit(
                    "convert ppcross",
                    cfg,
                    LinearDto {
                        x1: Cx(x1),
                        x2: Cx(x2),
                        delta: Cx(delta),
                    },
                )
            }
        },
    }
}
