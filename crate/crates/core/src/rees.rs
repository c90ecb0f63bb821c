//! Relations of the Rees algebras of `J_G` and `in_lex(J_G)`, the Rees map,
//! and bigraded slices of its kernel.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::linalg::{rank_auto, SparseEchelon, SparseVec};
use crate::algebra::monomial::{base_variables, monomials_of_degree};
use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, VariableId};
use crate::graph::{Edge, GraphError, LabeledGraph, Triangle};
use crate::ideal::{edge_generator, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReesError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} is not the variable of an edge of the graph")]
    UnknownEdgeVariable(VariableId),
    #[error("slice of bidegree ({m}, {b}) has {size} monomials, over the budget of {limit}")]
    Budget { m: u32, b: u32, size: u128, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Koszul,
    EagonNorthcott,
    Pluecker,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Koszul, Family::EagonNorthcott, Family::Pluecker];

    pub fn name(self) -> &'static str {
        match self {
            Family::Koszul => "Koszul",
            Family::EagonNorthcott => "Eagon-Northcott",
            Family::Pluecker => "Pluecker",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The combinatorial datum a relation is attached to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two edges with their (1-based) clique indices.
    EdgePair { first: (Edge, usize), second: (Edge, usize) },
    /// A triangle; `y` tells which of its two relations this is.
    Triangle { triangle: Triangle, y: bool },
    FourClique([usize; 4]),
}

impl Witness {
    /// Text form with vertex labels shifted by `offset`.
    pub fn display(&self, offset: usize) -> String {
        let o = offset;
        let e = |e: Edge| format!("{{{},{}}}", e.lo() + o, e.hi() + o);
        match self {
            Witness::EdgePair { first, second } => {
                format!("{} in clique {}, {} in clique {}", e(first.0), first.1, e(second.0), second.1)
            }
            Witness::Triangle { triangle: Triangle(i, j, k), y } => {
                format!("triangle {{{},{},{}}}, {}", i + o, j + o, k + o, if *y { "y" } else { "x" })
            }
            Witness::FourClique([a, b, c, d]) => format!("4-clique {{{},{},{},{}}}", a + o, b + o, c + o, d + o),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(0))
    }
}

#[derive(Debug, Clone)]
pub struct ReesRelation<F: Field> {
    pub family: Family,
    pub variant: Variant,
    pub body: Polynomial<F>,
    pub witness: Witness,
    /// `(T-degree, xy-degree)` with each `T_ij` weighted `(1, 2)`.
    pub bidegree: (u32, u32),
}

fn t(e: Edge) -> VariableId {
    VariableId::edge(e.lo(), e.hi())
}

fn mono(vars: &[VariableId]) -> Monomial {
    vars.iter().fold(Monomial::one(), |m, &v| m.mul_var(v))
}

fn x(i: usize) -> VariableId {
    VariableId::X(i as u16)
}

fn y(i: usize) -> VariableId {
    VariableId::Y(i as u16)
}

fn edge(i: usize, j: usize) -> Edge {
    Edge::new(i, j).expect("distinct endpoints")
}

fn relation<F: Field>(family: Family, variant: Variant, body: Polynomial<F>, witness: Witness) -> ReesRelation<F> {
    let bidegree = body.rees_bidegree().expect("relations are bihomogeneous");
    ReesRelation { family, variant, body, witness, bidegree }
}

/// Generators of the relation ideal of the Rees algebra, grouped Koszul,
/// then Eagon-Northcott (per triangle, `x` relation first), then Pluecker.
///
/// Koszul: one relation per unordered pair of edges with different clique
/// indices. In the initial variant only pairs where one edge dominates the
/// other in both coordinates contribute; the remaining pairs share a
/// variable and their relation is a multiple of an Eagon-Northcott one.
/// Pluecker relations are one per 4-clique; in the initial variant they are
/// enumerated on a best-effort basis.
pub fn rees_relations<F: Field>(
    field: &F,
    graph: &LabeledGraph,
    variant: Variant,
) -> Result<Vec<ReesRelation<F>>, ReesError> {
    let cliques = graph.maximal_cliques()?;
    let edges = graph.edges();
    let indexed: Vec<(Edge, usize)> =
        edges.iter().map(|&e| (e, cliques.index_of(e).expect("clique list covers edges"))).collect();
    let mut out = Vec::new();

    for (a, &(e, ia)) in indexed.iter().enumerate() {
        for &(f, ib) in &indexed[a + 1..] {
            if ia == ib {
                continue;
            }
            let witness = Witness::EdgePair { first: (e, ia), second: (f, ib) };
            match variant {
                Variant::Binomial => {
                    let fe = edge_generator(field, e, variant);
                    let ff = edge_generator(field, f, variant);
                    let body = fe
                        .mul(&Polynomial::var(field, t(f)))
                        .sub(&ff.mul(&Polynomial::var(field, t(e))));
                    out.push(relation(Family::Koszul, variant, body, witness));
                }
                Variant::Initial => {
                    let (big, small) = if e.lo() > f.lo() && e.hi() > f.hi() {
                        (e, f)
                    } else if f.lo() > e.lo() && f.hi() > e.hi() {
                        (f, e)
                    } else {
                        continue;
                    };
                    let body = Polynomial::from_int_terms(
                        field,
                        [
                            (1, mono(&[x(big.lo()), y(big.hi()), t(small)])),
                            (-1, mono(&[x(small.lo()), y(small.hi()), t(big)])),
                        ],
                    );
                    out.push(relation(Family::Koszul, variant, body, witness));
                }
            }
        }
    }

    for tri in graph.triangles() {
        let Triangle(i, j, k) = tri;
        let (tij, tik, tjk) = (t(edge(i, j)), t(edge(i, k)), t(edge(j, k)));
        let (xb, yb): (Vec<(i64, Monomial)>, Vec<(i64, Monomial)>) = match variant {
            Variant::Binomial => (
                vec![(1, mono(&[x(i), tjk])), (-1, mono(&[x(j), tik])), (1, mono(&[x(k), tij]))],
                vec![(1, mono(&[y(j), tik])), (-1, mono(&[y(i), tjk])), (-1, mono(&[y(k), tij]))],
            ),
            Variant::Initial => (
                vec![(1, mono(&[x(i), tjk])), (-1, mono(&[x(j), tik]))],
                vec![(1, mono(&[y(j), tik])), (-1, mono(&[y(k), tij]))],
            ),
        };
        for (terms, is_y) in [(xb, false), (yb, true)] {
            let body = Polynomial::from_int_terms(field, terms);
            out.push(relation(Family::EagonNorthcott, variant, body, Witness::Triangle { triangle: tri, y: is_y }));
        }
    }

    for q in graph.four_cliques() {
        let [a, b, c, d] = q;
        let terms = match variant {
            Variant::Binomial => vec![
                (1, mono(&[t(edge(a, b)), t(edge(c, d))])),
                (-1, mono(&[t(edge(a, c)), t(edge(b, d))])),
                (1, mono(&[t(edge(a, d)), t(edge(b, c))])),
            ],
            Variant::Initial => vec![
                (1, mono(&[t(edge(a, d)), t(edge(b, c))])),
                (-1, mono(&[t(edge(a, c)), t(edge(b, d))])),
            ],
        };
        let body = Polynomial::from_int_terms(field, terms);
        out.push(relation(Family::Pluecker, variant, body, Witness::FourClique(q)));
    }
    Ok(out)
}

/// Number of relations of each family, in [`Family::ALL`] order.
pub fn family_counts<F: Field>(relations: &[ReesRelation<F>]) -> [usize; 3] {
    let mut counts = [0; 3];
    for r in relations {
        counts[r.family as usize] += 1;
    }
    counts
}

/// The Rees map: `T_ij` goes to `f_ij * T` (binomial) or `x_i y_j * T`
/// (initial), `x` and `y` are fixed.
pub fn phi_apply<F: Field>(
    field: &F,
    f: &Polynomial<F>,
    graph: &LabeledGraph,
    variant: Variant,
) -> Result<Polynomial<F>, ReesError> {
    let mut images: HashMap<VariableId, Polynomial<F>> = HashMap::new();
    let rees = Polynomial::var(field, VariableId::Rees);
    let mut out = Polynomial::zero(field);
    for (m, c) in f.terms() {
        let mut term = Polynomial::constant(field, c.clone());
        for &(v, e) in m.factors() {
            let image = match v {
                VariableId::T(i, j) => {
                    let e = edge(i as usize, j as usize);
                    if !graph.contains(e) {
                        return Err(ReesError::UnknownEdgeVariable(v));
                    }
                    images.entry(v).or_insert_with(|| edge_generator(field, e, variant).mul(&rees)).clone()
                }
                other => Polynomial::var(field, other),
            };
            term = term.mul(&image.pow(e));
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Leading monomials `x_i T_jk` and `y_j T_ik` of the Eagon-Northcott
/// relations, two per triangle `i < j < k`, in triangle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingMonomialSet {
    pub members: Vec<Monomial>,
}

pub fn en_leading_monomials(graph: &LabeledGraph) -> Result<LeadingMonomialSet, ReesError> {
    graph.maximal_cliques()?;
    let mut members = Vec::new();
    for Triangle(i, j, k) in graph.triangles() {
        members.push(mono(&[x(i), t(edge(j, k))]));
        members.push(mono(&[y(j), t(edge(i, k))]));
    }
    Ok(LeadingMonomialSet { members })
}

/// The first pair (in list order) with a common variable, if any.
pub fn check_pairwise_coprime(members: &[Monomial]) -> Result<(), (Monomial, Monomial)> {
    for (a, u) in members.iter().enumerate() {
        for v in &members[a + 1..] {
            if !u.is_coprime(v) {
                return Err((u.clone(), v.clone()));
            }
        }
    }
    Ok(())
}

/// Default cap on the number of monomials in one kernel slice.
pub const DEFAULT_SLICE_BUDGET: usize = 200_000;

/// The bidegree-`(m, b)` piece of `S` together with the Rees map restricted
/// to it, `T^a u -> u * f^a`, as sparse vectors over the degree-`b`
/// monomials of the base ring.
pub struct KernelSlice<F: Field> {
    field: F,
    pub m: u32,
    pub b: u32,
    /// Basis of `S_(m, b)`: T-monomial times base monomial.
    pub columns: Vec<Monomial>,
    images: Vec<SparseVec<F::Elem>>,
    image_len: usize,
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl<F: Field> KernelSlice<F> {
    pub fn new(
        field: &F,
        graph: &LabeledGraph,
        variant: Variant,
        m: u32,
        b: u32,
        budget: usize,
    ) -> Result<Self, ReesError> {
        let edges = graph.edges();
        let n = graph.vertex_count();
        let mut slice = KernelSlice { field: field.clone(), m, b, columns: Vec::new(), images: Vec::new(), image_len: 0 };
        if b < 2 * m || (m > 0 && edges.is_empty()) {
            return Ok(slice);
        }
        let d = b - 2 * m;
        let size = binomial_u128((edges.len() + m as usize) as u128 - 1, m as u128)
            .saturating_mul(binomial_u128((2 * n) as u128 + d as u128 - 1, d as u128));
        if size > budget as u128 {
            return Err(ReesError::Budget { m, b, size, limit: budget });
        }
        let tvars: Vec<VariableId> = edges.iter().map(|&e| t(e)).collect();
        let gens: HashMap<VariableId, Polynomial<F>> =
            edges.iter().map(|&e| (t(e), edge_generator(field, e, variant))).collect();
        let base = monomials_of_degree(&base_variables(n), d);
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for tm in monomials_of_degree(&tvars, m) {
            let product = tm.factors().iter().fold(Polynomial::constant(field, field.one()), |acc, (v, e)| {
                acc.mul(&gens[v].pow(*e))
            });
            for u in &base {
                let mut vec: SparseVec<F::Elem> = product
                    .terms()
                    .iter()
                    .map(|(w, c)| {
                        let key = w.mul(u);
                        let next = index.len();
                        (*index.entry(key).or_insert(next), c.clone())
                    })
                    .collect();
                vec.sort_by_key(|p| p.0);
                slice.columns.push(tm.mul(u));
                slice.images.push(vec);
            }
        }
        slice.image_len = index.len();
        Ok(slice)
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column_index(&self) -> HashMap<&Monomial, usize> {
        self.columns.iter().enumerate().map(|(i, m)| (m, i)).collect()
    }

    /// `dim ker`, as columns minus rank.
    pub fn kernel_dimension(&self) -> usize {
        self.len() - rank_auto(&self.field, self.images.clone(), self.image_len)
    }

    /// A basis of the kernel as elements of `S`.
    pub fn kernel_basis(&self) -> Vec<Polynomial<F>> {
        let mut echelon = SparseEchelon::with_kernel(&self.field);
        for v in &self.images {
            echelon.insert(v.clone());
        }
        echelon
            .into_kernel()
            .into_iter()
            .map(|combo| Polynomial::from_terms(&self.field, combo.into_iter().map(|(i, c)| (self.columns[i].clone(), c))))
            .collect()
    }

    /// Coordinates of a bihomogeneous element of `S_(m, b)` in this slice.
    pub fn coordinates(&self, index: &HashMap<&Monomial, usize>, f: &Polynomial<F>) -> SparseVec<F::Elem> {
        let mut v: SparseVec<F::Elem> = f.terms().iter().map(|(m, c)| (index[m], c.clone())).collect();
        v.sort_by_key(|p| p.0);
        v
    }
}

/// `dim_K` of the bidegree-`(m, b)` part of the kernel of the Rees map.
pub fn kernel_slice_dimension<F: Field>(
    field: &F,
    graph: &LabeledGraph,
    variant: Variant,
    m: u32,
    b: u32,
    budget: usize,
) -> Result<usize, ReesError> {
    Ok(KernelSlice::new(field, graph, variant, m, b, budget)?.kernel_dimension())
}

/// Minimal generators of the kernel in bidegree `(m, b)`: the slice
/// dimension minus the span of the degree-one multiples of the slice in
/// `(m, b - 1)`.
pub fn syzygy_generator_count<F: Field>(
    field: &F,
    graph: &LabeledGraph,
    variant: Variant,
    m: u32,
    b: u32,
    budget: usize,
) -> Result<usize, ReesError> {
    let top = KernelSlice::new(field, graph, variant, m, b, budget)?;
    let dim = top.kernel_dimension();
    if b == 0 || dim == 0 {
        return Ok(dim);
    }
    let lower = KernelSlice::new(field, graph, variant, m, b - 1, budget)?;
    let basis = lower.kernel_basis();
    if basis.is_empty() {
        return Ok(dim);
    }
    let index = top.column_index();
    let vars = base_variables(graph.vertex_count());
    let products = basis
        .iter()
        .flat_map(|g| vars.iter().map(move |&v| g.mul_term(&Monomial::var(v), &field.one())))
        .map(|p| top.coordinates(&index, &p))
        .collect();
    Ok(dim - rank_auto(field, products, top.len()))
}

/// Dimension of the bidegree-`(m, 2m + 1)` part of the ideal of `S`
/// generated by the Eagon-Northcott relations alone.
pub fn en_ideal_slice_dimension<F: Field>(
    field: &F,
    graph: &LabeledGraph,
    variant: Variant,
    m: u32,
    budget: usize,
) -> Result<usize, ReesError> {
    assert!(m >= 1);
    let top = KernelSlice::new(field, graph, variant, m, 2 * m + 1, budget)?;
    let en: Vec<Polynomial<F>> = rees_relations(field, graph, variant)?
        .into_iter()
        .filter(|r| r.family == Family::EagonNorthcott)
        .map(|r| r.body)
        .collect();
    let tvars: Vec<VariableId> = graph.edges().into_iter().map(t).collect();
    let index = top.column_index();
    let mut vecs = Vec::new();
    for tm in monomials_of_degree(&tvars, m - 1) {
        for g in &en {
            vecs.push(top.coordinates(&index, &g.mul_term(&tm, &field.one())));
        }
    }
    Ok(rank_auto(field, vecs, top.len()))
}

/// Leading monomial of a relation under the order used for the initial
/// variant.
pub fn revlex_leading<F: Field>(body: &Polynomial<F>) -> Option<Monomial> {
    body.leading_monomial(&MonomialOrder::RevLexS).cloned()
}
