//! Binomial edge ideals, their lex initial ideals, powers and standard
//! monomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::groebner::{buchberger_with_budget, is_groebner};
use crate::algebra::linalg::SparseEchelon;
use crate::algebra::monomial::base_variables;
use crate::algebra::{AlgebraError, Field, Monomial, MonomialOrder, Polynomial, VariableId};
use crate::graph::{Edge, LabeledGraph};

/// Which of the two ideals attached to a graph: `J_G` itself or its lex
/// initial ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Binomial,
    Initial,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::Binomial, Variant::Initial];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Binomial => "binomial",
            Variant::Initial => "initial",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binomial" => Ok(Variant::Binomial),
            "initial" => Ok(Variant::Initial),
            other => Err(format!("unknown variant `{other}` (expected binomial or initial)")),
        }
    }
}

/// `f_ij = x_i y_j - x_j y_i` for the edge `{i, j}`, `i < j`.
pub fn edge_binomial<F: Field>(field: &F, e: Edge) -> Polynomial<F> {
    let (i, j) = (e.lo() as u16, e.hi() as u16);
    let plus = Monomial::from_pairs([(VariableId::X(i), 1), (VariableId::Y(j), 1)]);
    let minus = Monomial::from_pairs([(VariableId::X(j), 1), (VariableId::Y(i), 1)]);
    Polynomial::from_int_terms(field, [(1, plus), (-1, minus)])
}

/// `x_i y_j`, the lex leading monomial of `f_ij`.
pub fn edge_leading<F: Field>(field: &F, e: Edge) -> Polynomial<F> {
    let (i, j) = (e.lo() as u16, e.hi() as u16);
    Polynomial::monomial(field, Monomial::from_pairs([(VariableId::X(i), 1), (VariableId::Y(j), 1)]))
}

/// The generator attached to `e` in the given variant.
pub fn edge_generator<F: Field>(field: &F, e: Edge, variant: Variant) -> Polynomial<F> {
    match variant {
        Variant::Binomial => edge_binomial(field, e),
        Variant::Initial => edge_leading(field, e),
    }
}

#[derive(Debug, Clone)]
pub struct EdgeIdeal<F: Field> {
    graph: LabeledGraph,
    variant: Variant,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> EdgeIdeal<F> {
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// One generator per edge, in edge order.
    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// Whether the generators form a lex Groebner basis.
    pub fn generators_are_groebner(&self) -> bool {
        is_groebner(&self.generators, &MonomialOrder::LexR)
    }
}

pub fn edge_ideal<F: Field>(field: &F, graph: &LabeledGraph, variant: Variant) -> EdgeIdeal<F> {
    let generators = graph.edges().into_iter().map(|e| edge_generator(field, e, variant)).collect();
    EdgeIdeal { graph: graph.clone(), variant, generators }
}

/// Multisets of size `m` from `0..k`, as non-decreasing index vectors in
/// lexicographic order.
pub fn multisets(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(k: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(k, m, i, cur, out);
            cur.pop();
        }
    }
    rec(k, m, 0, &mut cur, &mut out);
    out
}

/// All products of `m` generators (with repetition), in multiset order.
pub fn power_products<F: Field>(gens: &[Polynomial<F>], field: &F, m: usize) -> Vec<Polynomial<F>> {
    multisets(gens.len(), m)
        .into_iter()
        .map(|idx| idx.iter().fold(Polynomial::constant(field, field.one()), |acc, &i| acc.mul(&gens[i])))
        .collect()
}

/// Minimal generators of `I^m`: the degree-`m` products of generators,
/// keeping each product that is linearly independent of the ones kept
/// before it (which also drops repeats). All products share one degree,
/// so linear independence is the same as minimality.
pub fn ideal_power<F: Field>(field: &F, ideal: &EdgeIdeal<F>, m: usize) -> Vec<Polynomial<F>> {
    assert!(m >= 1, "powers start at m = 1");
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut echelon = SparseEchelon::new(field);
    let mut kept = Vec::new();
    for p in power_products(&ideal.generators, field, m) {
        let mut v: Vec<(usize, F::Elem)> = p
            .terms()
            .iter()
            .map(|(mon, c)| {
                let next = index.len();
                (*index.entry(mon.clone()).or_insert(next), c.clone())
            })
            .collect();
        v.sort_by_key(|t| t.0);
        if echelon.insert(v) {
            kept.push(p);
        }
    }
    kept
}

/// Default step budget for Groebner computations of powers.
pub const DEFAULT_GROEBNER_BUDGET: usize = 200_000;

/// Lex Groebner basis of `J_G^m`, starting from the products of the edge
/// binomials.
pub fn power_groebner_basis<F: Field>(
    field: &F,
    graph: &LabeledGraph,
    m: usize,
    budget: usize,
) -> Result<Vec<Polynomial<F>>, AlgebraError> {
    let ideal = edge_ideal(field, graph, Variant::Binomial);
    let gens = ideal_power(field, &ideal, m);
    buchberger_with_budget(&gens, &MonomialOrder::LexR, Some(budget))
}

/// Compares `in_lex(J_G^m)` with `(in_lex J_G)^m` as monomial ideals.
pub fn power_initial_commutes<F: Field>(
    field: &F,
    graph: &LabeledGraph,
    m: usize,
    budget: usize,
) -> Result<bool, AlgebraError> {
    let gb = power_groebner_basis(field, graph, m, budget)?;
    let order = MonomialOrder::LexR;
    let lead: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial(&order).cloned()).collect();
    let init = edge_ideal(field, graph, Variant::Initial);
    let power: Vec<Monomial> = ideal_power(field, &init, m)
        .iter()
        .filter_map(|p| p.leading_monomial(&order).cloned())
        .collect();
    let within = |a: &[Monomial], b: &[Monomial]| a.iter().all(|u| b.iter().any(|g| g.divides(u)));
    Ok(within(&lead, &power) && within(&power, &lead))
}

/// Standard monomials of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: u32,
    /// Lex descending.
    pub monomials: Vec<Monomial>,
}

/// Degree-`d` monomials in `x_0..x_{n-1}, y_0..y_{n-1}`, lex descending,
/// split by divisibility by some member of `leading`: returns
/// `(standard, in_initial_ideal)`.
pub fn split_by_initial(n: usize, leading: &[Monomial], d: u32) -> (Vec<Monomial>, Vec<Monomial>) {
    let vars = base_variables(n);
    let mut standard = Vec::new();
    let mut reducible = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    split_rec(&vars, leading, 0, d, &mut exps, &mut standard, &mut reducible);
    (standard, reducible)
}

fn split_rec(
    vars: &[VariableId],
    leading: &[Monomial],
    pos: usize,
    left: u32,
    exps: &mut [u32],
    standard: &mut Vec<Monomial>,
    reducible: &mut Vec<Monomial>,
) {
    if pos == vars.len() {
        if left == 0 {
            let m = Monomial::from_pairs(vars.iter().copied().zip(exps.iter().copied()));
            if leading.iter().any(|l| l.divides(&m)) {
                reducible.push(m);
            } else {
                standard.push(m);
            }
        }
        return;
    }
    let range = if pos + 1 == vars.len() { left..=left } else { 0..=left };
    for e in range.rev() {
        exps[pos] = e;
        split_rec(vars, leading, pos + 1, left - e, exps, standard, reducible);
    }
    exps[pos] = 0;
}

/// Standard monomials of degree `d` for an ideal whose lex Groebner basis
/// has the given leading monomials.
pub fn standard_monomials(n: usize, leading: &[Monomial], d: u32) -> GradedBasis {
    GradedBasis { degree: d, monomials: split_by_initial(n, leading, d).0 }
}

/// Leading monomials of a basis under lex.
pub fn lex_leading_monomials<F: Field>(basis: &[Polynomial<F>]) -> Vec<Monomial> {
    basis.iter().filter_map(|b| b.leading_monomial(&MonomialOrder::LexR).cloned()).collect()
}
