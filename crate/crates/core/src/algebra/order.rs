use std::cmp::Ordering;

use super::monomial::{Monomial, VariableId};
use super::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankMode {
    Lex,
    /// Graded reverse lexicographic.
    DegRevLex,
}

/// A monomial order.
///
/// * `LexR`: lexicographic on `K[x, y]` with `x_0 > ... > x_{n-1} > y_0 > ... > y_{n-1}`.
/// * `RevLexS`: graded reverse lexicographic on `K[x, y, T]` with every `T`
///   above every `x` and `y`, and `T_ij > T_kl` iff `(i, j) < (k, l)`
///   lexicographically.
/// * `Ranked`: a caller-supplied ranking (first entry largest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    LexR,
    RevLexS,
    Ranked { ranks: Vec<(VariableId, usize)>, mode: RankMode },
}

impl MonomialOrder {
    /// `ranking[0]` is the largest variable. Panics on repeated variables.
    pub fn ranked(ranking: &[VariableId], mode: RankMode) -> MonomialOrder {
        let mut ranks: Vec<(VariableId, usize)> =
            ranking.iter().copied().enumerate().map(|(r, v)| (v, r)).collect();
        ranks.sort();
        assert!(ranks.windows(2).all(|w| w[0].0 != w[1].0), "ranking repeats a variable");
        MonomialOrder::Ranked { ranks, mode }
    }

    pub fn admits(&self, v: VariableId) -> bool {
        match self {
            MonomialOrder::LexR => v.is_base(),
            MonomialOrder::RevLexS => v.is_base() || v.is_edge_variable(),
            MonomialOrder::Ranked { ranks, .. } => ranks.binary_search_by_key(&v, |p| p.0).is_ok(),
        }
    }

    pub fn check(&self, m: &Monomial) -> Result<(), AlgebraError> {
        match m.variables().find(|&v| !self.admits(v)) {
            Some(v) => Err(AlgebraError::VariableOutsideOrder(v)),
            None => Ok(()),
        }
    }

    /// Checked comparison; fails when either monomial uses a variable the
    /// order does not rank.
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering, AlgebraError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.cmp(u, v))
    }

    /// Unchecked comparison for monomials already known to lie in the
    /// order's universe.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self {
            MonomialOrder::LexR => lex(u.factors(), v.factors()),
            MonomialOrder::RevLexS => degrevlex(u.factors(), v.factors()),
            MonomialOrder::Ranked { ranks, mode } => {
                let ru = rank_pairs(ranks, u);
                let rv = rank_pairs(ranks, v);
                match mode {
                    RankMode::Lex => lex(&ru, &rv),
                    RankMode::DegRevLex => degrevlex(&ru, &rv),
                }
            }
        }
    }
}

fn rank_pairs(ranks: &[(VariableId, usize)], m: &Monomial) -> Vec<(usize, u32)> {
    let mut out: Vec<(usize, u32)> = m
        .factors()
        .iter()
        .map(|&(v, e)| {
            let r = ranks
                .binary_search_by_key(&v, |p| p.0)
                .map(|i| ranks[i].1)
                .unwrap_or(usize::MAX);
            (r, e)
        })
        .collect();
    out.sort_unstable();
    out
}

// Both inputs sorted by key, smaller key = more significant variable.
fn lex<K: Ord>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.0.cmp(&y.0) {
            Ordering::Equal => match x.1.cmp(&y.1) {
                Ordering::Equal => continue,
                other => return other,
            },
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    a.len().cmp(&b.len())
}

fn degrevlex<K: Ord>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    let da: u32 = a.iter().map(|p| p.1).sum();
    let db: u32 = b.iter().map(|p| p.1).sum();
    if da != db {
        return da.cmp(&db);
    }
    let (mut i, mut j) = (a.len(), b.len());
    while i > 0 && j > 0 {
        let (x, y) = (&a[i - 1], &b[j - 1]);
        match x.0.cmp(&y.0) {
            Ordering::Equal => {
                if x.1 != y.1 {
                    return y.1.cmp(&x.1);
                }
                i -= 1;
                j -= 1;
            }
            // `a` carries the least significant variable in play
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use VariableId::*;

    fn m(pairs: &[(VariableId, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::LexR;
        let a = m(&[(X(1), 1), (Y(2), 1)]);
        let b = m(&[(X(2), 1), (Y(1), 1)]);
        assert_eq!(o.compare(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(o.cmp(&m(&[(Y(0), 5)]), &m(&[(X(3), 1)])), Ordering::Less);
        assert_eq!(o.cmp(&Monomial::one(), &m(&[(Y(3), 1)])), Ordering::Less);
        assert!(matches!(
            o.compare(&m(&[(VariableId::edge(0, 1), 1)]), &a),
            Err(AlgebraError::VariableOutsideOrder(_))
        ));
    }

    #[test]
    fn revlex_examples() {
        let o = MonomialOrder::RevLexS;
        let t01 = m(&[(VariableId::edge(0, 1), 1)]);
        assert_eq!(o.compare(&t01, &m(&[(X(0), 1)])).unwrap(), Ordering::Greater);
        // y0*T12 leads y1*T02, x0*T12 leads x1*T02
        let lhs = m(&[(Y(0), 1), (VariableId::edge(1, 2), 1)]);
        let rhs = m(&[(Y(1), 1), (VariableId::edge(0, 2), 1)]);
        assert_eq!(o.cmp(&lhs, &rhs), Ordering::Greater);
        let lhs = m(&[(X(0), 1), (VariableId::edge(1, 2), 1)]);
        let rhs = m(&[(X(1), 1), (VariableId::edge(0, 2), 1)]);
        assert_eq!(o.cmp(&lhs, &rhs), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[(X(0), 2)]), &m(&[(Y(4), 3)])), Ordering::Less);
    }

    #[test]
    fn ranked_matches_builtin() {
        let ranking = [X(0), X(1), Y(0), Y(1)];
        let lex = MonomialOrder::ranked(&ranking, RankMode::Lex);
        let grevlex = MonomialOrder::ranked(&ranking, RankMode::DegRevLex);
        let vars = ranking;
        let mons: Vec<Monomial> = (0..3)
            .flat_map(|d| super::super::monomial::monomials_of_degree(&vars, d))
            .collect();
        for a in &mons {
            for b in &mons {
                assert_eq!(lex.cmp(a, b), MonomialOrder::LexR.cmp(a, b));
                assert_eq!(grevlex.cmp(a, b), MonomialOrder::RevLexS.cmp(a, b));
            }
        }
        assert!(lex.compare(&m(&[(X(5), 1)]), &Monomial::one()).is_err());
    }
}
