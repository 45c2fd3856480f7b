//! JSON shapes of matrices, coordinate records and reports.
//!
//! A complex number is written `[re, im]`; inputs may also give a bare
//! real number.

use fn3_core::gluing::{CentralizerParam, Edge, EdgeKind, FnRecord, PantsDecomposition, SurfaceRep};
use fn3_core::linalg::{from_rows, to_rows, CScalar, Mat3};
use fn3_core::pants::{PantsRep, SolverReport};
use fn3_core::real_forms::SubgroupVerdict;
use fn3_core::trace_algebra::{RootChoice, ShapePair, TraceCoordsY};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cx(pub CScalar);

impl Serialize for Cx {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cx {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Real(f64),
            Pair([f64; 2]),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Real(x) => Cx(CScalar::new(x, 0.0)),
            Raw::Pair([re, im]) => Cx(CScalar::new(re, im)),
        })
    }
}

impl From<CScalar> for Cx {
    fn from(z: CScalar) -> Self {
        Cx(z)
    }
}

fn cxs<const N: usize>(v: &[CScalar; N]) -> [Cx; N] {
    v.map(Cx)
}

/// A 3×3 matrix as three rows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatDto(pub [[Cx; 3]; 3]);

impl MatDto {
    pub fn to_mat(&self) -> Mat3 {
        from_rows(self.0.map(|row| row.map(|z| z.0)))
    }
}

impl From<&Mat3> for MatDto {
    fn from(m: &Mat3) -> Self {
        MatDto(to_rows(m).map(|row| row.map(Cx)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RootDto {
    #[default]
    Plus,
    Minus,
}

impl From<RootChoice> for RootDto {
    fn from(r: RootChoice) -> Self {
        match r {
            RootChoice::Plus => RootDto::Plus,
            RootChoice::Minus => RootDto::Minus,
        }
    }
}

impl From<RootDto> for RootChoice {
    fn from(r: RootDto) -> Self {
        match r {
            RootDto::Plus => RootChoice::Plus,
            RootDto::Minus => RootChoice::Minus,
        }
    }
}

/// `(trA, trB, trC, σ₊, trA⁻¹, trB⁻¹, trC⁻¹, σ₋)` and the commutator root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordsDto {
    pub y: [Cx; 8],
    #[serde(default)]
    pub root: RootDto,
}

impl CoordsDto {
    pub fn to_coords(&self) -> TraceCoordsY {
        TraceCoordsY::new(self.y.map(|z| z.0), self.root.into())
    }
}

impl From<&TraceCoordsY> for CoordsDto {
    fn from(y: &TraceCoordsY) -> Self {
        CoordsDto {
            y: cxs(&y.y),
            root: y.root.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapeDto {
    pub sigma_plus: Cx,
    pub sigma_minus: Cx,
}

impl From<&ShapePair> for ShapeDto {
    fn from(s: &ShapePair) -> Self {
        ShapeDto {
            sigma_plus: Cx(s.sigma_plus),
            sigma_minus: Cx(s.sigma_minus),
        }
    }
}

/// A pants by its generators. `C` and `coords` are recomputed on input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PantsDto {
    #[serde(rename = "A")]
    pub a: MatDto,
    #[serde(rename = "B")]
    pub b: MatDto,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<MatDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<CoordsDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibility_margin: Option<f64>,
}

impl PantsDto {
    pub fn to_pants(&self) -> PantsRep {
        let mut p = PantsRep::new(self.a.to_mat(), self.b.to_mat());
        // A stated root only matters when the computed one is ambiguous.
        if let Some(c) = &self.coords {
            if p.coords.quadratic().repeated(1e-6) {
                p.coords.root = c.root.into();
            }
        }
        p
    }
}

impl From<&PantsRep> for PantsDto {
    fn from(p: &PantsRep) -> Self {
        PantsDto {
            a: (&p.a).into(),
            b: (&p.b).into(),
            c: Some((&p.c).into()),
            coords: Some((&p.coords).into()),
            irreducible: Some(p.irreducible),
            irreducibility_margin: Some(p.irreducibility_margin),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverDto {
    pub residual: f64,
    pub iterations: usize,
    pub restarts: usize,
    pub gauge: String,
}

impl From<&SolverReport> for SolverDto {
    fn from(r: &SolverReport) -> Self {
        SolverDto {
            residual: r.residual,
            iterations: r.iterations,
            restarts: r.restarts,
            gauge: r.gauge.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct GlueDto {
    #[serde(default)]
    pub u: Cx,
    #[serde(default)]
    pub v: Cx,
}

impl From<&CentralizerParam> for GlueDto {
    fn from(p: &CentralizerParam) -> Self {
        GlueDto { u: Cx(p.u), v: Cx(p.v) }
    }
}

impl GlueDto {
    pub fn to_param(&self) -> CentralizerParam {
        CentralizerParam::new(self.u.0, self.v.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDto {
    pub a: [usize; 2],
    pub b: [usize; 2],
    #[serde(default)]
    pub glue: GlueDto,
}

/// One pants of a decomposition file, by matrices or by coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PantsInput {
    Matrices(PantsDto),
    Coords(CoordsDto),
}

/// Pants graph, gluing parameters and the pants themselves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionFile {
    pub genus: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_pants: Option<usize>,
    pub edges: Vec<EdgeDto>,
    pub pants: Vec<PantsInput>,
}

impl DecompositionFile {
    pub fn decomposition(&self) -> PantsDecomposition {
        PantsDecomposition {
            genus: self.genus,
            n_pants: self.n_pants.unwrap_or(self.pants.len()),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    a: (e.a[0], e.a[1]),
                    b: (e.b[0], e.b[1]),
                    glue: e.glue.to_param(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StableLetterDto {
    pub edge: usize,
    #[serde(rename = "D")]
    pub d: MatDto,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceDto {
    pub genus: usize,
    pub edges: Vec<EdgeDto>,
    pub edge_kinds: Vec<String>,
    pub pants: Vec<PantsDto>,
    pub frames: Vec<MatDto>,
    pub stable_letters: Vec<StableLetterDto>,
    pub max_relation_residual: f64,
}

impl From<&SurfaceRep> for SurfaceDto {
    fn from(s: &SurfaceRep) -> Self {
        let d = &s.decomposition;
        SurfaceDto {
            genus: d.genus,
            edges: d
                .edges
                .iter()
                .map(|e| EdgeDto {
                    a: [e.a.0, e.a.1],
                    b: [e.b.0, e.b.1],
                    glue: (&e.glue).into(),
                })
                .collect(),
            edge_kinds: s
                .kinds
                .iter()
                .map(|k| match k {
                    EdgeKind::Tree { .. } => "amalgamation".to_string(),
                    EdgeKind::Stable { .. } => "hnn".to_string(),
                })
                .collect(),
            pants: s.pants.iter().map(PantsDto::from).collect(),
            frames: s.frames.iter().map(MatDto::from).collect(),
            stable_letters: s
                .stable_letters
                .iter()
                .map(|(edge, d)| StableLetterDto { edge: *edge, d: d.into() })
                .collect(),
            max_relation_residual: s.max_relation_residual(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PantsRecordDto {
    pub coords: CoordsDto,
    pub shape: ShapeDto,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeRecordDto {
    pub trace: Cx,
    pub trace_inv: Cx,
    pub glue: GlueDto,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FnRecordDto {
    pub pants: Vec<PantsRecordDto>,
    pub edges: Vec<EdgeRecordDto>,
}

impl From<&FnRecord> for FnRecordDto {
    fn from(r: &FnRecord) -> Self {
        FnRecordDto {
            pants: r
                .pants
                .iter()
                .map(|p| PantsRecordDto {
                    coords: (&p.coords).into(),
                    shape: (&p.shape).into(),
                })
                .collect(),
            edges: r
                .edges
                .iter()
                .map(|e| EdgeRecordDto {
                    trace: Cx(e.traces.0),
                    trace_inv: Cx(e.traces.1),
                    glue: (&e.glue.canonical()).into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvidenceDto {
    pub name: String,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictDto {
    pub tag: String,
    pub passing: Vec<String>,
    pub evidence: Vec<EvidenceDto>,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&SubgroupVerdict> for VerdictDto {
    fn from(v: &SubgroupVerdict) -> Self {
        VerdictDto {
            tag: v.tag.name().to_string(),
            passing: v.passing.iter().map(|t| t.name().to_string()).collect(),
            evidence: v
                .evidence
                .iter()
                .map(|e| EvidenceDto {
                    name: e.name.to_string(),
                    residual: e.residual,
                    passed: e.passed,
                })
                .collect(),
            samples: v.samples,
            note: v.note.map(str::to_string),
        }
    }
}
