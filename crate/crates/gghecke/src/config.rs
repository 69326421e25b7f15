//! Field selection and basis-point parsing shared by every subcommand.

use gghecke_core::gf::prime_power;
use gghecke_core::hecke::basis_of_kind;
use gghecke_core::{BasisElem, CartanType, Field, Group, Hecke};

use crate::CliError;

/// Which field to work over.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FieldSpec {
    pub q: Option<u32>,
    pub p: Option<u32>,
    pub f: Option<u32>,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn of_order(q: u32) -> FieldSpec {
        FieldSpec { q: Some(q), ..FieldSpec::default() }
    }

    pub fn build(&self) -> Result<Field, CliError> {
        let (p, f) = match (self.q, self.p) {
            (Some(q), _) => {
                let (p, f) = prime_power(q)?;
                if self.p.is_some_and(|x| x != p) || self.f.is_some_and(|x| x != f) {
                    return Err(CliError::Usage(format!("--q {q} is inconsistent with --p/--f")));
                }
                (p, f)
            }
            (None, Some(p)) => (p, self.f.unwrap_or(1)),
            (None, None) => return Err(CliError::Usage("one of --q or --p is required".into())),
        };
        Ok(Field::new(p, f, self.modulus.as_deref())?)
    }
}

pub fn group(ty: CartanType, field: Field) -> Result<Group, CliError> {
    if ty == CartanType::B2 && field.p() == 2 {
        return Err(CliError::Usage(format!(
            "type B2 is only supported for odd p, but q = {} has characteristic 2",
            field.q()
        )));
    }
    Ok(Group::new(ty, field)?)
}

pub fn hecke(ty: CartanType, spec: &FieldSpec) -> Result<Hecke, CliError> {
    Ok(Hecke::new(group(ty, spec.build()?)?)?)
}

/// A basis selector: every element of one kind, or a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pick {
    Kind(u8),
    Elem(BasisElem),
}

/// Parses `kind` or `kind:params`, with parameters as comma-separated integer codes.
pub fn parse_pick(field: &Field, s: &str) -> Result<Pick, CliError> {
    let bad = || CliError::Usage(format!("cannot parse basis element {s:?}; expected kind or kind:c1,c2"));
    let (kind, params) = match s.split_once(':') {
        Some((k, rest)) => (k, Some(rest)),
        None => (s, None),
    };
    let kind: u8 = kind.trim().parse().map_err(|_| bad())?;
    if kind > 3 {
        return Err(CliError::Usage(format!("basis kind {kind} is not in 0..=3")));
    }
    let Some(params) = params else { return Ok(Pick::Kind(kind)) };
    let params = params
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<u32>().map_err(|_| bad()).and_then(|c| Ok(field.elem(c)?)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Pick::Elem(BasisElem::new(kind, &params)?))
}

/// Every basis element in canonical order.
pub fn all_basis(g: &Group) -> Vec<BasisElem> {
    (0..4).flat_map(|k| basis_of_kind(g, k)).collect()
}

/// The basis elements a selector admits; `None` admits all of them.
pub fn expand(g: &Group, pick: Option<Pick>) -> Vec<BasisElem> {
    match pick {
        None => all_basis(g),
        Some(Pick::Kind(k)) => basis_of_kind(g, k),
        Some(Pick::Elem(b)) => vec![b],
    }
}

/// Selected triples `(i, j, k)` in canonical order.
pub fn triples(g: &Group, picks: [Option<Pick>; 3]) -> Vec<[BasisElem; 3]> {
    let [a, b, c] = picks.map(|p| expand(g, p));
    itertools::iproduct!(a, b, c).map(|(i, j, k)| [i, j, k]).collect()
}
