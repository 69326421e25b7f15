//! Parallel verification sweeps: algorithm against closed forms, and
//! algorithm against the brute-force oracles.

use std::collections::BTreeMap;

use gghecke_core::hecke::{is_erratum, table_formula_with, Reading, TableRow};
use gghecke_core::intersect::intersect;
use gghecke_core::oracle::{brute_intersect, coset_key, coset_sum, AlgebraOracle};
use gghecke_core::{BasisElem, CycloNum, Group, Hecke};
use rayon::prelude::*;

use crate::format::{MismatchRecord, TermJson, Triple};
use crate::CliError;

/// Two values of `S_{ij}^k` that should agree but do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub triple: [BasisElem; 3],
    pub computed: CycloNum,
    pub expected: CycloNum,
    pub source: &'static str,
}

impl Mismatch {
    pub fn row(&self) -> TableRow {
        let [i, j, k] = self.triple;
        TableRow::new(i.kind(), j.kind(), k.kind())
    }

    /// The report record, listing every `(j, μ)` that contributes to the algorithmic value.
    pub fn record(&self, h: &Hecke) -> Result<MismatchRecord, CliError> {
        let [i, j, k] = &self.triple;
        let terms = h
            .terms(i, j, k)?
            .into_iter()
            .map(|t| TermJson {
                j: t.j.iter().map(|d| char::from(b'0' + d)).collect(),
                mu: t.mu.values().iter().map(|x| x.code()).collect(),
                arg: t.arg.code(),
            })
            .collect();
        Ok(MismatchRecord {
            triple: Triple::new(h.group(), i, j, k),
            computed: (&self.computed).into(),
            expected: (&self.expected).into(),
            source: self.source.to_string(),
            terms,
            rendered: [self.computed.to_string(), self.expected.to_string()],
        })
    }
}

/// Outcome of comparing every selected constant with the closed forms.
#[derive(Debug, Clone, Default)]
pub struct TableCheck {
    pub checked: u64,
    /// Checked and mismatched counts per row.
    pub rows: BTreeMap<TableRow, (u64, u64)>,
    pub mismatches: Vec<Mismatch>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn failing_rows(&self) -> Vec<TableRow> {
        self.rows.iter().filter(|(_, c)| c.1 > 0).map(|(r, _)| *r).collect()
    }

    /// Whether every failing row is a known misprint.
    pub fn only_errata(&self, group: &Group) -> bool {
        self.failing_rows().into_iter().all(|r| is_erratum(group.cartan_type(), r))
    }
}

/// Compares `structure_constant` with the closed forms on the given triples.
pub fn check_tables(h: &Hecke, triples: &[[BasisElem; 3]], reading: Reading) -> Result<TableCheck, CliError> {
    let g = h.group();
    let results: Vec<Option<Mismatch>> = triples
        .par_iter()
        .map(|&[i, j, k]| -> Result<_, CliError> {
            let computed = h.structure_constant(&i, &j, &k)?;
            let expected = table_formula_with(g, &i, &j, &k, reading)?;
            Ok((computed != expected).then_some(Mismatch { triple: [i, j, k], computed, expected, source: "table" }))
        })
        .collect::<Result<_, _>>()?;
    let mut out = TableCheck::default();
    for (t, m) in triples.iter().zip(results) {
        let row = TableRow::new(t[0].kind(), t[1].kind(), t[2].kind());
        let e = out.rows.entry(row).or_default();
        e.0 += 1;
        out.checked += 1;
        if let Some(m) = m {
            e.1 += 1;
            out.mismatches.push(m);
        }
    }
    Ok(out)
}

/// Outcome of comparing the algorithm with the oracles.
#[derive(Debug, Clone, Default)]
pub struct OracleCheck {
    pub checked: u64,
    /// Disagreeing values.  A differing coset set is reported with source
    /// `coset set` and the two coset counts as values.
    pub mismatches: Vec<Mismatch>,
}

impl OracleCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks each triple against the coset scan and, when `algebra` is set,
/// against explicit products in the group algebra.
pub fn check_oracle(h: &Hecke, triples: &[[BasisElem; 3]], budget: u64, algebra: bool) -> Result<OracleCheck, CliError> {
    let g = h.group();
    let alg = if algebra {
        let mut a = AlgebraOracle::new(g, budget);
        let mut elems: Vec<BasisElem> = triples.iter().flatten().copied().collect();
        elems.sort();
        elems.dedup();
        a.prepare(&elems)?;
        Some(a)
    } else {
        None
    };
    let p = g.field().p();
    let results: Vec<Vec<Mismatch>> = triples
        .par_iter()
        .map(|&[i, j, k]| -> Result<_, CliError> {
            let (l, m, n) = (i.point(g), j.point(g), k.point(g));
            let cosets = brute_intersect(g, l, m, n, budget)?;
            let mut reps: Vec<_> = intersect(g, l, m, n)?.iter().map(|r| coset_key(g, &r.g)).collect();
            reps.sort();
            let computed = h.structure_constant(&i, &j, &k)?;
            let mut bad = Vec::new();
            if !cosets.iter().map(|c| c.key).eq(reps.iter().copied()) {
                let count = |n: usize| CycloNum::from_int(p, n as i64);
                bad.push(Mismatch { triple: [i, j, k], computed: count(reps.len()), expected: count(cosets.len()), source: "coset set" });
            }
            let brute = coset_sum(g, &cosets);
            if brute != computed {
                bad.push(Mismatch { triple: [i, j, k], computed: computed.clone(), expected: brute, source: "coset scan" });
            }
            if let Some(a) = &alg {
                let v = a.constant(&i, &j, &k)?;
                if v != computed {
                    bad.push(Mismatch { triple: [i, j, k], computed, expected: v, source: "group algebra" });
                }
            }
            Ok(bad)
        })
        .collect::<Result<_, _>>()?;
    let mut out = OracleCheck::default();
    for bad in results {
        out.checked += 1;
        out.mismatches.extend(bad);
    }
    Ok(out)
}
