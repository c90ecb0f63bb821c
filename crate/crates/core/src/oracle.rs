//! Graded Betti numbers from Koszul homology, one graded piece at a time.
//!
//! For an ideal `I` of `R = K[x, y]` with a known lex Groebner basis,
//! `beta_{i,j}(R/I) = dim H_i(K ⊗ R/I)_j` where `K` is the Koszul complex on
//! all `2n` variables. Two complexes are available:
//!
//! * quotient side: `Λ^p ⊗ (R/I)_{j-p}` on standard monomials;
//! * ideal side: `Λ^p ⊗ I_{j-p}`, whose homology is `beta_{p,j}(I) =
//!   beta_{p+1,j}(R/I)`. A basis of `I_d` is `u - NF(u)` for the degree-`d`
//!   monomials `u` of the initial ideal; the coordinates of an element of
//!   `I_d` are its coefficients on those monomials.
//!
//! The ideal side is much smaller in the linear strand and is the default.
//! Differential: `d(S, u) = sum_k (-1)^(k+1) (S \ v_k, x_{v_k} u)` for
//! `S = {v_1 < ... < v_p}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::groebner::Reducer;
use crate::algebra::linalg::{SparseEchelon, SparseVec};
use crate::algebra::monomial::base_variables;
use crate::algebra::{AlgebraError, Field, Monomial, MonomialOrder, Polynomial, VariableId};
use crate::graph::LabeledGraph;
use crate::ideal::{edge_ideal, ideal_power, power_groebner_basis, split_by_initial, Variant};
use crate::strand::StrandProfile;

/// Default cap on the dimension of a chain group entering a rank
/// computation.
pub const DEFAULT_PIECE_BUDGET: usize = 20_000;

/// Largest vertex count the oracle accepts (chain keys pack a variable
/// subset into 32 bits).
pub const MAX_ORACLE_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("chain group (p = {p}, j = {j}) has dimension {dim}, over the budget of {limit}")]
    Budget { p: usize, j: u32, dim: usize, limit: usize },
    #[error("the oracle handles at most {MAX_ORACLE_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Ideal,
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `beta_{i,j}(I)`.
    Ideal,
    /// `beta_{i,j}(R/I)`.
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Oracle,
}

/// One table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Value(u64),
    /// Declined: the named chain group exceeded the budget.
    Skipped { p: usize, j: u32, dim: usize },
    /// Outside the computed window.
    Unknown,
}

impl Cell {
    pub fn value(self) -> Option<u64> {
        match self {
            Cell::Value(v) => Some(v),
            _ => None,
        }
    }

    fn from_result(r: Result<u64, OracleError>) -> Result<Cell, OracleError> {
        match r {
            Ok(v) => Ok(Cell::Value(v)),
            Err(OracleError::Budget { p, j, dim, .. }) => Ok(Cell::Skipped { p, j, dim }),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(0) => f.write_str("."),
            Cell::Value(v) => write!(f, "{v}"),
            Cell::Skipped { .. } => f.write_str("*"),
            Cell::Unknown => f.write_str("?"),
        }
    }
}

/// Graded Betti numbers stored in quotient convention. `window` bounds the
/// computed region: quotient indices `i <= max_i`, degrees `j <= max_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub provenance: Provenance,
    pub max_i: usize,
    pub max_j: u32,
    entries: BTreeMap<(usize, u32), Cell>,
}

impl BettiTable {
    pub fn new(provenance: Provenance, max_i: usize, max_j: u32) -> Self {
        BettiTable { provenance, max_i, max_j, entries: BTreeMap::new() }
    }

    pub fn set_quotient(&mut self, i: usize, j: u32, cell: Cell) {
        self.entries.insert((i, j), cell);
    }

    pub fn set_ideal(&mut self, i: usize, j: u32, cell: Cell) {
        self.set_quotient(i + 1, j, cell);
    }

    /// `beta_{i,j}(R/I)`; entries never filled in are unknown.
    pub fn quotient(&self, i: usize, j: u32) -> Cell {
        self.entries.get(&(i, j)).copied().unwrap_or(Cell::Unknown)
    }

    /// `beta_{i,j}(I) = beta_{i+1,j}(R/I)`.
    pub fn ideal(&self, i: usize, j: u32) -> Cell {
        self.quotient(i + 1, j)
    }

    pub fn get(&self, convention: Convention, i: usize, j: u32) -> Cell {
        match convention {
            Convention::Ideal => self.ideal(i, j),
            Convention::Quotient => self.quotient(i, j),
        }
    }

    /// Table built from a strand profile: the diagonal `j = 2m + i` in ideal
    /// convention, everything else unknown.
    pub fn from_profile(profile: &StrandProfile) -> BettiTable {
        let m = profile.m as u32;
        let top = profile.strand.len();
        let mut t = BettiTable::new(Provenance::Formula, top, 2 * m + top as u32);
        for (i, x) in profile.strand.iter().enumerate() {
            let v = u64::try_from(x).unwrap_or(u64::MAX);
            t.set_ideal(i, 2 * m + i as u32, Cell::Value(v));
        }
        t
    }

    fn filled(&self, convention: Convention) -> Vec<(usize, u32, Cell)> {
        self.entries
            .iter()
            .filter_map(|(&(i, j), &c)| match convention {
                Convention::Quotient => Some((i, j, c)),
                Convention::Ideal => (i >= 1).then(|| (i - 1, j, c)),
            })
            .collect()
    }

    /// Staircase layout: columns are homological degrees `i`, rows are
    /// `j - i`; rows of zeros are left out. Zero is `.`, skipped is `*`,
    /// unknown is `?`.
    pub fn render(&self, convention: Convention) -> String {
        let cells = self.filled(convention);
        if cells.is_empty() {
            return String::from("(empty)\n");
        }
        let max_i = cells.iter().map(|c| c.0).max().unwrap_or(0);
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = cells.iter().filter(|c| c.1 >= c.0 as u32).map(|c| c.1 - c.0 as u32).collect();
            r.sort_unstable();
            r.dedup();
            r.retain(|&r| (0..=max_i).any(|i| self.get(convention, i, r + i as u32) != Cell::Value(0)));
            r
        };
        let shown = |i: usize, r: u32| self.get(convention, i, r + i as u32).to_string();
        let width = (0..=max_i)
            .flat_map(|i| rows.iter().map(move |&r| (i, r)))
            .map(|(i, r)| shown(i, r).len())
            .chain((0..=max_i).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.iter().map(|r| r.to_string().len()).max().unwrap_or(1) + 1;
        let mut out = String::new();
        let _ = write!(out, "{:label$}", "");
        for i in 0..=max_i {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        for &r in &rows {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..=max_i {
                let _ = write!(out, " {:>width$}", shown(i, r));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, convention: Convention) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .filled(convention)
            .into_iter()
            .map(|(i, j, c)| match c {
                Cell::Value(v) => serde_json::json!({"i": i, "j": j, "value": v}),
                Cell::Skipped { p, j: pj, dim } => {
                    serde_json::json!({"i": i, "j": j, "skipped": {"p": p, "j": pj, "dim": dim}})
                }
                Cell::Unknown => serde_json::json!({"i": i, "j": j, "unknown": true}),
            })
            .collect();
        let (max_i, max_j) = match convention {
            Convention::Quotient => (self.max_i, self.max_j),
            Convention::Ideal => (self.max_i.saturating_sub(1), self.max_j),
        };
        serde_json::json!({
            "convention": convention,
            "provenance": self.provenance,
            "window": {"max_i": max_i, "max_j": max_j},
            "entries": entries,
        })
    }
}

/// Basis of one chain group: variable subsets (bitmasks over the `2n`
/// variables) paired with monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPiece {
    pub p: usize,
    pub j: u32,
    pub basis: Vec<(u64, Monomial)>,
}

struct DegreeData<E> {
    standard: Vec<Monomial>,
    standard_index: HashMap<Monomial, usize>,
    initial: Vec<Monomial>,
    initial_index: HashMap<Monomial, usize>,
    /// `NF(u)` for each initial-ideal monomial `u` (ideal side only).
    tails: Vec<Vec<(Monomial, E)>>,
}

/// Koszul-homology Betti oracle for one ideal given by a lex Groebner
/// basis. Caches graded pieces and ranks across queries.
pub struct KoszulOracle<F: Field> {
    field: F,
    n: usize,
    vars: Vec<VariableId>,
    reducer: Reducer<F>,
    leading: Vec<Monomial>,
    monomial_ideal: bool,
    route: Route,
    budget: usize,
    degrees: HashMap<u32, DegreeData<F::Elem>>,
    ranks: HashMap<(usize, u32), usize>,
}

/// Subsets of `0..n` of size `p` as bitmasks, increasing.
fn subsets(n: usize, p: usize) -> Vec<u64> {
    if p > n {
        return Vec::new();
    }
    if p == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut s: u64 = (1u64 << p) - 1;
    let limit = 1u64 << n;
    while s < limit {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl<F: Field> KoszulOracle<F> {
    /// `basis` must be a lex Groebner basis of a homogeneous ideal of
    /// `K[x_0..x_{n-1}, y_0..y_{n-1}]`.
    pub fn new(field: &F, n: usize, basis: Vec<Polynomial<F>>, route: Route, budget: usize) -> Result<Self, OracleError> {
        if n > MAX_ORACLE_VERTICES {
            return Err(OracleError::TooManyVertices(n));
        }
        let monomial_ideal = basis.iter().all(|b| b.len() == 1);
        let reducer = Reducer::new(basis, MonomialOrder::LexR);
        let leading = reducer.leading_monomials().cloned().collect();
        Ok(KoszulOracle {
            field: field.clone(),
            n,
            vars: base_variables(n),
            reducer,
            leading,
            monomial_ideal,
            route,
            budget,
            degrees: HashMap::new(),
            ranks: HashMap::new(),
        })
    }

    /// Oracle for `J_G^m` (binomial) or `(in_lex J_G)^m` (initial).
    pub fn for_power(
        field: &F,
        graph: &LabeledGraph,
        variant: Variant,
        m: usize,
        route: Route,
        budget: usize,
        groebner_budget: usize,
    ) -> Result<Self, OracleError> {
        let basis = match variant {
            Variant::Initial => ideal_power(field, &edge_ideal(field, graph, Variant::Initial), m),
            Variant::Binomial => power_groebner_basis(field, graph, m, groebner_budget)?,
        };
        KoszulOracle::new(field, graph.vertex_count(), basis, route, budget)
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        self.reducer.basis()
    }

    fn degree(&mut self, d: u32) -> &DegreeData<F::Elem> {
        if !self.degrees.contains_key(&d) {
            let (standard, initial) = split_by_initial(self.n, &self.leading, d);
            let tails = if self.route == Route::Ideal && !self.monomial_ideal {
                initial
                    .iter()
                    .map(|u| {
                        let p = Polynomial::monomial(&self.field, u.clone());
                        self.reducer.normal_form(&p).terms().to_vec()
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let index = |v: &[Monomial]| v.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            let data = DegreeData {
                standard_index: index(&standard),
                initial_index: index(&initial),
                standard,
                initial,
                tails,
            };
            self.degrees.insert(d, data);
        }
        &self.degrees[&d]
    }

    /// `dim (R/I)_d`.
    pub fn quotient_dimension(&mut self, d: u32) -> usize {
        self.degree(d).standard.len()
    }

    /// `dim I_d`.
    pub fn ideal_dimension(&mut self, d: u32) -> usize {
        self.degree(d).initial.len()
    }

    fn piece_dimension(&mut self, p: usize, j: u32) -> usize {
        if p > 2 * self.n || p as u32 > j {
            return 0;
        }
        let d = j - p as u32;
        let per = match self.route {
            Route::Ideal => self.ideal_dimension(d),
            Route::Quotient => self.quotient_dimension(d),
        };
        binomial(2 * self.n, p) * per
    }

    /// Chain group `C_p` in internal degree `j` for the active route.
    pub fn graded_piece(&mut self, p: usize, j: u32) -> GradedPiece {
        let mut basis = Vec::new();
        if p <= 2 * self.n && p as u32 <= j {
            let d = j - p as u32;
            let route = self.route;
            let monos = {
                let data = self.degree(d);
                match route {
                    Route::Ideal => data.initial.clone(),
                    Route::Quotient => data.standard.clone(),
                }
            };
            for s in subsets(2 * self.n, p) {
                for u in &monos {
                    basis.push((s, u.clone()));
                }
            }
        }
        GradedPiece { p, j, basis }
    }

    /// Image of `x_v * (basis element idx of degree d)` as coordinates in
    /// degree `d + 1`.
    fn multiply(&mut self, v: usize, d: u32, idx: usize) -> SparseVec<F::Elem> {
        let var = self.vars[v];
        let field = self.field.clone();
        let route = self.route;
        let monomial_ideal = self.monomial_ideal;
        let src: (Monomial, Vec<(Monomial, F::Elem)>) = {
            let data = self.degree(d);
            match route {
                Route::Ideal => (
                    data.initial[idx].clone(),
                    if monomial_ideal { Vec::new() } else { data.tails[idx].clone() },
                ),
                Route::Quotient => (data.standard[idx].clone(), Vec::new()),
            }
        };
        let (u, tail) = src;
        let xu = u.mul_var(var);
        let mut out: SparseVec<F::Elem> = Vec::new();
        match route {
            Route::Ideal => {
                let target = self.degree(d + 1);
                out.push((target.initial_index[&xu], field.one()));
                for (s, c) in &tail {
                    if let Some(&w) = target.initial_index.get(&s.mul_var(var)) {
                        out.push((w, field.neg(c)));
                    }
                }
            }
            Route::Quotient => {
                if monomial_ideal {
                    if let Some(&w) = self.degree(d + 1).standard_index.get(&xu) {
                        out.push((w, field.one()));
                    }
                } else {
                    let nf = self.reducer.normal_form(&Polynomial::monomial(&field, xu));
                    let target = self.degree(d + 1);
                    for (s, c) in nf.terms() {
                        out.push((target.standard_index[s], c.clone()));
                    }
                }
            }
        }
        out.sort_by_key(|t| t.0);
        out
    }

    /// Rank of `d_p : C_p -> C_{p-1}` in internal degree `j`.
    pub fn differential_rank(&mut self, p: usize, j: u32) -> Result<usize, OracleError> {
        if p == 0 || p > 2 * self.n || p as u32 > j {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(p, j)) {
            return Ok(r);
        }
        let dim = self.piece_dimension(p, j);
        if dim == 0 {
            return Ok(0);
        }
        if dim > self.budget {
            return Err(OracleError::Budget { p, j, dim, limit: self.budget });
        }
        let d = j - p as u32;
        let count = match self.route {
            Route::Ideal => self.ideal_dimension(d),
            Route::Quotient => self.quotient_dimension(d),
        };
        let shift = 2 * self.n;
        let mut echelon = SparseEchelon::new(&self.field);
        let mut products: HashMap<(usize, usize), SparseVec<F::Elem>> = HashMap::new();
        for s in subsets(2 * self.n, p) {
            for idx in 0..count {
                let mut col: SparseVec<F::Elem> = Vec::new();
                let mut k = 0;
                let mut rest = s;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let face = s & !(1u64 << v);
                    let img = match products.get(&(v, idx)) {
                        Some(img) => img.clone(),
                        None => {
                            let img = self.multiply(v, d, idx);
                            products.insert((v, idx), img.clone());
                            img
                        }
                    };
                    let positive = k % 2 == 0;
                    for (w, c) in img {
                        let c = if positive { c } else { self.field.neg(&c) };
                        col.push(((w << shift) | face as usize, c));
                    }
                    k += 1;
                }
                col.sort_by_key(|t| t.0);
                echelon.insert(col);
            }
        }
        let r = echelon.rank();
        self.ranks.insert((p, j), r);
        Ok(r)
    }

    /// `dim H_p(C)_j = dim C_p - rank d_p - rank d_{p+1}` for the active
    /// route.
    pub fn homology(&mut self, p: usize, j: u32) -> Result<u64, OracleError> {
        let dim = self.piece_dimension(p, j);
        if dim == 0 {
            return Ok(0);
        }
        if dim > self.budget {
            return Err(OracleError::Budget { p, j, dim, limit: self.budget });
        }
        let out = self.differential_rank(p, j)?;
        let inc = self.differential_rank(p + 1, j)?;
        Ok((dim - out - inc) as u64)
    }

    /// `beta_{i,j}(R/I)`.
    pub fn betti_quotient(&mut self, i: usize, j: u32) -> Result<u64, OracleError> {
        match self.route {
            Route::Quotient => self.homology(i, j),
            Route::Ideal => {
                if i == 0 {
                    Ok(u64::from(j == 0))
                } else {
                    self.homology(i - 1, j)
                }
            }
        }
    }

    /// `beta_{i,j}(I)`.
    pub fn betti_ideal(&mut self, i: usize, j: u32) -> Result<u64, OracleError> {
        self.betti_quotient(i + 1, j)
    }

    /// Alternating sums `(sum (-1)^p dim C_p, sum (-1)^p dim H_p)` in degree
    /// `j` over the full complex.
    pub fn euler_characteristics(&mut self, j: u32) -> Result<(i64, i64), OracleError> {
        let (mut chains, mut homology) = (0i64, 0i64);
        for p in 0..=2 * self.n {
            let sign = if p % 2 == 0 { 1 } else { -1 };
            chains += sign * self.piece_dimension(p, j) as i64;
            homology += sign * self.homology(p, j)? as i64;
        }
        Ok((chains, homology))
    }
}

/// Betti table of `R/I` over the window `i <= max_i`, `j <= max_j`
/// (quotient convention); pieces over budget are recorded as skipped.
pub fn graded_betti<F: Field>(oracle: &mut KoszulOracle<F>, max_i: usize, max_j: u32) -> Result<BettiTable, OracleError> {
    let mut table = BettiTable::new(Provenance::Oracle, max_i, max_j);
    for j in 0..=max_j {
        for i in 0..=max_i {
            let cell = Cell::from_result(oracle.betti_quotient(i, j))?;
            table.set_quotient(i, j, cell);
        }
    }
    Ok(table)
}

/// `beta_{i, 2m+i}(I)` for `0 <= i <= max_i`.
pub fn linear_strand_betti<F: Field>(oracle: &mut KoszulOracle<F>, m: u32, max_i: usize) -> Result<Vec<Cell>, OracleError> {
    (0..=max_i).map(|i| Cell::from_result(oracle.betti_ideal(i, 2 * m + i as u32))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rationals};
    use crate::graph::running_example;
    use crate::ideal::DEFAULT_GROEBNER_BUDGET;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn values(cells: &[Cell]) -> Vec<u64> {
        cells.iter().map(|c| c.value().expect("within budget")).collect()
    }

    fn monomial_oracle(n: usize, gens: &[&str], route: Route) -> KoszulOracle<PrimeField> {
        let f = k();
        let basis = gens.iter().map(|g| Polynomial::parse(&f, g, 0).unwrap()).collect();
        KoszulOracle::new(&f, n, basis, route, DEFAULT_PIECE_BUDGET).unwrap()
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets(3, 0), vec![0]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(subsets(12, 5).len(), 792);
    }

    #[test]
    fn principal_ideal() {
        for route in [Route::Ideal, Route::Quotient] {
            let mut o = monomial_oracle(2, &["x0*y1"], route);
            assert_eq!(o.betti_ideal(0, 2).unwrap(), 1);
            for i in 1..3 {
                for j in 0..7 {
                    assert_eq!(o.betti_ideal(i, j).unwrap(), 0, "{route:?} {i} {j}");
                }
            }
            assert_eq!(o.betti_quotient(0, 0).unwrap(), 1);
        }
    }

    #[test]
    fn path_initial_ideal() {
        for route in [Route::Ideal, Route::Quotient] {
            let mut o = monomial_oracle(3, &["x0*y1", "x0*y2"], route);
            assert_eq!(o.betti_ideal(0, 2).unwrap(), 2);
            assert_eq!(o.betti_ideal(1, 3).unwrap(), 1);
            assert_eq!(o.betti_ideal(1, 4).unwrap(), 0);
        }
    }

    #[test]
    fn running_example_strands() {
        let f = k();
        let g = running_example();
        for variant in Variant::BOTH {
            let mut o =
                KoszulOracle::for_power(&f, &g, variant, 1, Route::Ideal, DEFAULT_PIECE_BUDGET, DEFAULT_GROEBNER_BUDGET)
                    .unwrap();
            assert_eq!(values(&linear_strand_betti(&mut o, 1, 3).unwrap()), vec![7, 4, 0, 0], "{variant}");
        }
        let mut o =
            KoszulOracle::for_power(&f, &g, Variant::Initial, 2, Route::Ideal, DEFAULT_PIECE_BUDGET, DEFAULT_GROEBNER_BUDGET)
                .unwrap();
        assert_eq!(values(&linear_strand_betti(&mut o, 2, 3).unwrap()), vec![28, 28, 6, 0]);
    }

    #[test]
    fn routes_agree_and_euler_holds() {
        let f = k();
        let g = LabeledGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        for variant in Variant::BOTH {
            let build = |route| {
                KoszulOracle::for_power(&f, &g, variant, 1, route, DEFAULT_PIECE_BUDGET, DEFAULT_GROEBNER_BUDGET).unwrap()
            };
            let (mut a, mut b) = (build(Route::Ideal), build(Route::Quotient));
            for j in 0..=5 {
                for i in 0..=4 {
                    assert_eq!(a.betti_ideal(i, j).unwrap(), b.betti_ideal(i, j).unwrap(), "{variant} {i} {j}");
                }
                let (c, h) = b.euler_characteristics(j).unwrap();
                assert_eq!(c, h);
                let (c, h) = a.euler_characteristics(j).unwrap();
                assert_eq!(c, h);
            }
        }
    }

    #[test]
    fn rationals_agree_with_prime_field() {
        let g = LabeledGraph::complete(3).unwrap();
        let q = Rationals;
        let f = k();
        let mut a = KoszulOracle::for_power(&q, &g, Variant::Binomial, 2, Route::Ideal, 5000, 10_000).unwrap();
        let mut b = KoszulOracle::for_power(&f, &g, Variant::Binomial, 2, Route::Ideal, 5000, 10_000).unwrap();
        for i in 0..3 {
            assert_eq!(a.betti_ideal(i, 4 + i as u32).unwrap(), b.betti_ideal(i, 4 + i as u32).unwrap());
        }
    }

    #[test]
    fn budget_and_table() {
        let mut o = monomial_oracle(3, &["x0*y1", "x0*y2"], Route::Quotient);
        o.budget = 10;
        assert!(matches!(o.betti_quotient(2, 4), Err(OracleError::Budget { .. })));
        let mut o = monomial_oracle(3, &["x0*y1", "x0*y2"], Route::Ideal);
        let t = graded_betti(&mut o, 3, 4).unwrap();
        assert_eq!(t.ideal(0, 2), Cell::Value(2));
        assert_eq!(t.ideal(1, 3), Cell::Value(1));
        assert_eq!(t.quotient(0, 0), Cell::Value(1));
        assert_eq!(t.ideal(5, 9), Cell::Unknown);
        let shown = t.render(Convention::Ideal);
        assert!(shown.contains("2:"), "{shown}");
        let json = t.to_json(Convention::Ideal);
        assert_eq!(json["convention"], "ideal");
        assert_eq!(json["provenance"], "oracle");
        let piece = o.graded_piece(1, 3);
        assert_eq!(piece.basis.len(), 6 * 2);
    }
}
