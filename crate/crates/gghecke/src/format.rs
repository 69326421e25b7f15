//! Serializable records and their JSON and CSV encodings.
//!
//! JSON output goes through [`serde_json::Value`], whose maps are ordered, so
//! keys always come out sorted and the bytes depend only on the records.

use gghecke_core::intersect::{CosetRep, Point};
use gghecke_core::{BasisElem, CycloNum, Field, Fq, Group, GroupElem, Rational, Torus, Unipotent};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A record that can be written as a CSV row.
pub trait Record: Serialize {
    const HEADER: &'static [&'static str];

    fn row(&self) -> Vec<String>;
}

pub fn rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Joins integer codes with commas, the same way they are written on the command line.
pub fn codes(xs: &[u32]) -> String {
    itertools::join(xs, ",")
}

fn fq_codes(xs: &[Fq]) -> Vec<u32> {
    xs.iter().map(|x| x.code()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycloJson {
    pub p: u32,
    pub coeffs: Vec<String>,
}

impl From<&CycloNum> for CycloJson {
    fn from(x: &CycloNum) -> CycloJson {
        CycloJson { p: x.p(), coeffs: x.coeffs().iter().map(rational).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldJson {
    pub p: u32,
    pub f: u32,
    pub modulus: Vec<u32>,
}

impl From<&Field> for FieldJson {
    fn from(k: &Field) -> FieldJson {
        FieldJson { p: k.p(), f: k.f(), modulus: k.modulus().to_vec() }
    }
}

pub fn torus(t: Torus) -> [u32; 2] {
    t.chi().map(|x| x.code())
}

pub fn unipotent(g: &Group, u: &Unipotent) -> Vec<u32> {
    fq_codes(&u.coords()[..g.n_pos()])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupElemJson {
    pub u: Vec<u32>,
    pub t: [u32; 2],
    pub w: String,
    pub u2: Vec<u32>,
}

impl GroupElemJson {
    pub fn new(g: &Group, x: &GroupElem) -> GroupElemJson {
        GroupElemJson {
            u: unipotent(g, &x.u),
            t: torus(x.t),
            w: g.root_system().word_string(x.w),
            u2: unipotent(g, &x.v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointJson {
    pub w: String,
    pub t: [u32; 2],
}

impl PointJson {
    pub fn new(g: &Group, p: Point) -> PointJson {
        PointJson { w: g.root_system().word_string(p.w), t: torus(p.t) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UxuJson {
    pub u: Vec<u32>,
    pub x: PointJson,
    pub u2: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZuyJson {
    pub z: PointJson,
    pub v: Vec<u32>,
    pub y: PointJson,
}

/// One left-coset representative of a double coset intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectRecord {
    pub j: String,
    pub types: String,
    pub mu: Vec<u32>,
    pub rep: GroupElemJson,
    pub t_mu: [u32; 2],
    pub t_0: [u32; 2],
    pub uxu: UxuJson,
    pub zuy: ZuyJson,
}

impl IntersectRecord {
    pub fn new(g: &Group, r: &CosetRep) -> IntersectRecord {
        IntersectRecord {
            j: r.sub.j_string(),
            types: r.sub.type_string(),
            mu: fq_codes(r.mu.values()),
            rep: GroupElemJson::new(g, &r.g),
            t_mu: torus(r.t_mu),
            t_0: torus(r.t_zero),
            uxu: UxuJson { u: unipotent(g, &r.uxu.u), x: PointJson::new(g, r.uxu.x), u2: unipotent(g, &r.uxu.u2) },
            zuy: ZuyJson { z: PointJson::new(g, r.zuy.z), v: unipotent(g, &r.zuy.v), y: PointJson::new(g, r.zuy.y) },
        }
    }
}

impl Record for IntersectRecord {
    const HEADER: &'static [&'static str] = &["j", "types", "mu", "t_mu", "t_0", "u", "t", "w", "u2"];

    fn row(&self) -> Vec<String> {
        vec![
            self.j.clone(),
            self.types.clone(),
            codes(&self.mu),
            codes(&self.t_mu),
            codes(&self.t_0),
            codes(&self.rep.u),
            codes(&self.rep.t),
            self.rep.w.clone(),
            codes(&self.rep.u2),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisRecord {
    pub kind: u8,
    pub params: Vec<u32>,
    pub w: String,
    pub t: [u32; 2],
}

impl BasisRecord {
    pub fn new(g: &Group, b: &BasisElem) -> BasisRecord {
        let p = b.point(g);
        BasisRecord { kind: b.kind(), params: fq_codes(&b.params()), w: g.root_system().word_string(p.w), t: torus(p.t) }
    }
}

impl Record for BasisRecord {
    const HEADER: &'static [&'static str] = &["kind", "params", "w", "t"];

    fn row(&self) -> Vec<String> {
        vec![self.kind.to_string(), codes(&self.params), self.w.clone(), codes(&self.t)]
    }
}

/// Identifies a constant `S_{ij}^k` at concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triple {
    #[serde(rename = "type")]
    pub ty: String,
    pub p: u32,
    pub f: u32,
    pub q: u32,
    pub i: u8,
    pub j: u8,
    pub k: u8,
    pub params: Vec<u32>,
}

impl Triple {
    pub fn new(g: &Group, i: &BasisElem, j: &BasisElem, k: &BasisElem) -> Triple {
        let f = g.field();
        let params = [i, j, k].iter().flat_map(|b| b.params()).map(|x| x.code()).collect();
        Triple { ty: g.cartan_type().to_string(), p: f.p(), f: f.f(), q: f.q(), i: i.kind(), j: j.kind(), k: k.kind(), params }
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.ty.clone(),
            self.p.to_string(),
            self.f.to_string(),
            self.q.to_string(),
            self.i.to_string(),
            self.j.to_string(),
            self.k.to_string(),
            codes(&self.params),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantRecord {
    #[serde(flatten)]
    pub triple: Triple,
    pub value: CycloJson,
    #[serde(skip)]
    pub rendered: String,
}

impl ConstantRecord {
    pub fn new(g: &Group, i: &BasisElem, j: &BasisElem, k: &BasisElem, value: &CycloNum) -> ConstantRecord {
        ConstantRecord { triple: Triple::new(g, i, j, k), value: value.into(), rendered: value.to_string() }
    }
}

impl Record for ConstantRecord {
    const HEADER: &'static [&'static str] = &["type", "p", "f", "q", "i", "j", "k", "params", "value"];

    fn row(&self) -> Vec<String> {
        let mut r = self.triple.cells();
        r.push(self.rendered.clone());
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumRecord {
    pub name: String,
    pub args: Vec<u32>,
    pub value: CycloJson,
    #[serde(skip)]
    pub rendered: String,
}

impl SumRecord {
    pub fn new(name: &str, args: Vec<u32>, value: &CycloNum) -> SumRecord {
        SumRecord { name: name.to_string(), args, value: value.into(), rendered: value.to_string() }
    }
}

impl Record for SumRecord {
    const HEADER: &'static [&'static str] = &["name", "args", "value"];

    fn row(&self) -> Vec<String> {
        vec![self.name.clone(), codes(&self.args), self.rendered.clone()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub j: String,
    pub mu: Vec<u32>,
    pub arg: u32,
}

/// A disagreement between two evaluations of one constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MismatchRecord {
    #[serde(flatten)]
    pub triple: Triple,
    pub computed: CycloJson,
    pub expected: CycloJson,
    pub source: String,
    pub terms: Vec<TermJson>,
    #[serde(skip)]
    pub rendered: [String; 2],
}

impl Record for MismatchRecord {
    const HEADER: &'static [&'static str] = &["type", "p", "f", "q", "i", "j", "k", "params", "source", "computed", "expected", "terms"];

    fn row(&self) -> Vec<String> {
        let mut r = self.triple.cells();
        r.push(self.source.clone());
        r.extend(self.rendered.iter().cloned());
        r.push(itertools::join(self.terms.iter().map(|t| format!("{}:{}", t.j, codes(&t.mu))), ";"));
        r
    }
}

/// Summary of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub field: FieldJson,
    pub checked: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<RowJson>,
    pub mismatches: Vec<MismatchRecord>,
}

/// Per-row counts in a table sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowJson {
    pub row: String,
    pub checked: u64,
    pub mismatched: u64,
    pub erratum: bool,
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>, CliError> {
    let v = serde_json::to_value(value)?;
    let mut out = serde_json::to_vec_pretty(&v)?;
    out.push(b'\n');
    Ok(out)
}

pub fn to_csv<R: Record>(records: &[R]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(R::HEADER)?;
    for r in records {
        w.write_record(r.row())?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

/// Encodes a record list in the requested format.
pub fn emit<R: Record>(records: &[R], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => to_json(records),
        Format::Csv => to_csv(records),
    }
}
