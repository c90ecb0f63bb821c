use std::cmp::Ordering;
use std::fmt;

/// A ring variable. The derived order (all `T`s, then `x`s, then `y`s, then
/// the Rees parameter, indices ascending) is the storage order inside a
/// [`Monomial`] and doubles as the ranking "earlier is larger" used by the
/// built-in monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VariableId {
    /// Rees-ring variable of the edge `{i, j}`, `i < j`.
    T(u16, u16),
    X(u16),
    Y(u16),
    /// The parameter `T` of the Rees algebra `R[T]`, target of the Rees map.
    Rees,
}

impl VariableId {
    /// `T(i, j)` with the endpoints sorted. Panics on `i == j`.
    pub fn edge(i: usize, j: usize) -> VariableId {
        assert!(i != j, "T-variables are indexed by edges");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        VariableId::T(a as u16, b as u16)
    }

    pub fn is_edge_variable(self) -> bool {
        matches!(self, VariableId::T(..))
    }

    pub fn is_base(self) -> bool {
        matches!(self, VariableId::X(_) | VariableId::Y(_))
    }

    pub fn render(self, offset: usize) -> String {
        match self {
            VariableId::T(i, j) => format!("T({},{})", i as usize + offset, j as usize + offset),
            VariableId::X(i) => format!("x{}", i as usize + offset),
            VariableId::Y(i) => format!("y{}", i as usize + offset),
            VariableId::Rees => "T".to_string(),
        }
    }

    // x, y before T inside a printed term, matching `x0*T(1,2)`.
    pub(crate) fn print_rank(self) -> (u8, VariableId) {
        match self {
            VariableId::X(_) | VariableId::Y(_) => (0, self),
            VariableId::T(..) => (1, self),
            VariableId::Rees => (2, self),
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(0))
    }
}

/// The `2n` variables `x_0..x_{n-1}, y_0..y_{n-1}` of the base ring, in
/// ranking order.
pub fn base_variables(n: usize) -> Vec<VariableId> {
    (0..n)
        .map(|i| VariableId::X(i as u16))
        .chain((0..n).map(|i| VariableId::Y(i as u16)))
        .collect()
}

/// Sparse exponent vector: `(variable, exponent)` pairs sorted by variable,
/// exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: VariableId) -> Monomial {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Accepts pairs in any order; repeated variables add up, zero exponents
    /// vanish.
    pub fn from_pairs<I: IntoIterator<Item = (VariableId, u32)>>(pairs: I) -> Monomial {
        let mut factors: Vec<(VariableId, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        factors.sort_by_key(|p| p.0);
        factors.dedup_by(|later, earlier| {
            if later.0 == earlier.0 {
                earlier.1 += later.1;
                true
            } else {
                false
            }
        });
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        match self.factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    /// Every variable counted with weight one.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|p| p.1).sum()
    }

    pub fn t_degree(&self) -> u32 {
        self.factors.iter().filter(|p| p.0.is_edge_variable()).map(|p| p.1).sum()
    }

    /// Degree in the `x` and `y` variables only.
    pub fn xy_degree(&self) -> u32 {
        self.factors.iter().filter(|p| p.0.is_base()).map(|p| p.1).sum()
    }

    /// Bidegree in the Rees grading, `deg T_ij = (1, 2)`, `deg x = deg y = (0, 1)`.
    pub fn rees_bidegree(&self) -> (u32, u32) {
        let t = self.t_degree();
        (t, 2 * t + self.xy_degree())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn mul_var(&self, v: VariableId) -> Monomial {
        let mut factors = self.factors.clone();
        match factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => factors[i].1 += 1,
            Err(i) => factors.insert(i, (v, 1)),
        }
        Monomial { factors }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { factors: self.factors.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let b = &other.factors;
        let mut j = 0;
        for &(v, e) in &self.factors {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            let sub = if j < other.factors.len() && other.factors[j].0 == v {
                j += 1;
                other.factors[j - 1].1
            } else {
                0
            };
            if e > sub {
                out.push((v, e - sub));
            }
        }
        Some(Monomial { factors: out })
    }

    fn merge_with(&self, other: &Monomial, both: fn(u32, u32) -> u32, keep_single: bool) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    if keep_single {
                        out.push(a[i]);
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    if keep_single {
                        out.push(b[j]);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let e = both(a[i].1, b[j].1);
                    if e > 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { factors: out }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max, true)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::min, false)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.factors.iter().map(|p| p.0)
    }

    /// `x2*y3*T(0,1)`-style text; `1` for the unit.
    pub fn render(&self, offset: usize) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut factors = self.factors.clone();
        factors.sort_by_key(|p| p.0.print_rank());
        factors
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.render(offset)
                } else {
                    format!("{}^{e}", v.render(offset))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(0))
    }
}

/// All monomials of total degree `d` in `vars`, each variable weight one.
/// Output is lexicographically descending with respect to the order of
/// `vars` (first variable most significant).
pub fn monomials_of_degree(vars: &[VariableId], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    fill_degree(vars, 0, d, &mut exps, &mut out);
    out
}

fn fill_degree(vars: &[VariableId], pos: usize, left: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
    if pos + 1 >= vars.len() {
        if let Some(last) = exps.last_mut() {
            *last = left;
        } else if left > 0 {
            return;
        }
        out.push(Monomial::from_pairs(vars.iter().copied().zip(exps.iter().copied())));
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill_degree(vars, pos + 1, left - e, exps, out);
    }
    exps[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use VariableId::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_pairs([(X(0), 1), (Y(1), 2)]);
        let b = Monomial::from_pairs([(Y(1), 1), (X(2), 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::from_pairs([(X(0), 1), (X(2), 1), (Y(1), 3)]));
        assert!(a.divides(&ab) && b.divides(&ab));
        assert_eq!(ab.div(&a), Some(b.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&b), Monomial::from_pairs([(X(0), 1), (X(2), 1), (Y(1), 2)]));
        assert_eq!(a.gcd(&b), Monomial::var(Y(1)));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(X(0)).is_coprime(&Monomial::var(X(1))));
        assert_eq!(a.mul_var(Y(1)), Monomial::from_pairs([(X(0), 1), (Y(1), 3)]));
        assert_eq!(Monomial::from_pairs([(X(0), 1), (X(0), 2), (Y(0), 0)]), Monomial::from_pairs([(X(0), 3)]));
    }

    #[test]
    fn bidegrees() {
        let m = Monomial::from_pairs([(X(1), 1), (VariableId::edge(2, 0), 1)]);
        assert_eq!(m.t_degree(), 1);
        assert_eq!(m.xy_degree(), 1);
        assert_eq!(m.rees_bidegree(), (1, 3));
        assert_eq!(m.render(0), "x1*T(0,2)");
        assert_eq!(m.render(1), "x2*T(1,3)");
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(4 + 2 - 1, 2) = 10 monomials of degree 2 in four variables
        let vars = base_variables(2);
        let ms = monomials_of_degree(&vars, 2);
        assert_eq!(ms.len(), 10);
        assert_eq!(ms[0], Monomial::from_pairs([(X(0), 2)]));
        assert_eq!(monomials_of_degree(&vars, 0), vec![Monomial::one()]);
        assert_eq!(monomials_of_degree(&[], 0), vec![Monomial::one()]);
        assert!(monomials_of_degree(&[], 1).is_empty());
        assert_eq!(monomials_of_degree(&base_variables(3), 4).len(), 126);
    }
}
