use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::field::Field;
use super::monomial::{Monomial, VariableId};
use super::order::MonomialOrder;
use super::AlgebraError;

/// A finite sum of terms with nonzero coefficients, stored sorted by the
/// structural order of [`Monomial`] so equal polynomials compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F) -> Self {
        Polynomial { field: field.clone(), terms: Vec::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(), c)
    }

    pub fn term(field: &F, m: Monomial, c: F::Elem) -> Self {
        let terms = if field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { field: field.clone(), terms }
    }

    pub fn monomial(field: &F, m: Monomial) -> Self {
        Self::term(field, m, field.one())
    }

    pub fn var(field: &F, v: VariableId) -> Self {
        Self::monomial(field, Monomial::var(v))
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F::Elem)>>(field: &F, terms: I) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(slot) => *slot = field.add(slot, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(field, acc)
    }

    fn from_map(field: &F, acc: HashMap<Monomial, F::Elem>) -> Self {
        let mut terms: Vec<(Monomial, F::Elem)> =
            acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial { field: field.clone(), terms }
    }

    /// Sum of `c * m` over integer-coefficient pairs.
    pub fn from_int_terms<I: IntoIterator<Item = (i64, Monomial)>>(field: &F, terms: I) -> Self {
        Self::from_terms(field, terms.into_iter().map(|(c, m)| (m, field.from_i64(c))))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.0.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Every term has the same Rees bidegree.
    pub fn rees_bidegree(&self) -> Option<(u32, u32)> {
        let first = self.terms.first()?.0.rees_bidegree();
        self.terms.iter().all(|t| t.0.rees_bidegree() == first).then_some(first)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|t| (&t.0, &t.1))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|t| t.0)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &F::Elem)> {
        let mut ts: Vec<_> = self.terms.iter().map(|t| (&t.0, &t.1)).collect();
        ts.sort_by(|a, b| order.cmp(b.0, a.0));
        ts
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        Polynomial {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(a, c))).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = self.field.inv(c);
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    fn merge(&self, other: &[(Monomial, F::Elem)], negate: bool) -> Self {
        let f = &self.field;
        let (a, b) = (&self.terms, other);
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
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { f.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { field: f.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(&other.terms, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(&other.terms, true)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        let mut terms: Vec<(Monomial, F::Elem)> = self
            .terms
            .iter()
            .map(|(u, a)| (u.mul(m), self.field.mul(a, c)))
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial { field: self.field.clone(), terms }
    }

    /// `self - c * m * other`.
    pub fn sub_term_mul(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let shifted = other.mul_term(m, c);
        self.merge(&shifted.terms, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = f.mul(a, b);
                let m = u.mul(v);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = f.add(slot, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(f, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.field, self.field.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Variables occurring in some term.
    pub fn variables(&self) -> Vec<VariableId> {
        let mut vs: Vec<VariableId> = self.terms.iter().flat_map(|t| t.0.variables()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Text rendering with terms in descending `order` and labels shifted by
    /// `offset`: `x1*y2 - x2*y1`, `T(0,1)` for edge variables.
    pub fn render_with(&self, order: &MonomialOrder, offset: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let text = self.field.render(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&m.render(offset));
            } else {
                out.push_str(&magnitude);
                out.push('*');
                out.push_str(&m.render(offset));
            }
        }
        out
    }

    /// Renders under [`Self::display_order`] with zero-based labels.
    pub fn render(&self) -> String {
        self.render_with(&self.display_order(), 0)
    }

    /// Lex on the base ring, graded reverse lex once edge variables or the
    /// Rees parameter appear.
    pub fn display_order(&self) -> MonomialOrder {
        if self.terms.iter().all(|t| t.0.variables().all(|v| v.is_base())) {
            MonomialOrder::LexR
        } else {
            MonomialOrder::RevLexS
        }
    }

    /// Parses the grammar produced by [`Self::render_with`]. Integer and
    /// `a/b` coefficients are mapped into `field`.
    pub fn parse(field: &F, text: &str, offset: usize) -> Result<Self, AlgebraError> {
        Parser { src: text.as_bytes(), pos: 0, offset }.polynomial(field)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse::<u64>()
            .map_err(|e| self.err(e.to_string()))
    }

    fn label(&mut self) -> Result<u16, AlgebraError> {
        let v = self.number()?;
        let v = (v as usize)
            .checked_sub(self.offset)
            .ok_or_else(|| self.err(format!("label {v} is below the index offset {}", self.offset)))?;
        u16::try_from(v).map_err(|_| self.err("label too large"))
    }

    fn exponent(&mut self) -> Result<u32, AlgebraError> {
        if self.eat(b'^') {
            let e = self.number()?;
            u32::try_from(e).map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<(VariableId, u32), AlgebraError> {
        let v = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                VariableId::X(self.label()?)
            }
            Some(b'y') => {
                self.pos += 1;
                VariableId::Y(self.label()?)
            }
            Some(b'T') => {
                self.pos += 1;
                if self.eat(b'(') {
                    let i = self.label()?;
                    if !self.eat(b',') {
                        return Err(self.err("expected `,` in T(i,j)"));
                    }
                    let j = self.label()?;
                    if !self.eat(b')') {
                        return Err(self.err("expected `)`"));
                    }
                    if i >= j {
                        return Err(self.err("T(i,j) needs i < j"));
                    }
                    VariableId::T(i, j)
                } else {
                    VariableId::Rees
                }
            }
            _ => return Err(self.err("expected a variable")),
        };
        Ok((v, self.exponent()?))
    }

    fn term<F: Field>(&mut self, field: &F) -> Result<(Monomial, F::Elem), AlgebraError> {
        let mut coeff = field.one();
        let mut factors = Vec::new();
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            let num = self.number()?;
            let num = i64::try_from(num).map_err(|_| self.err("coefficient too large"))?;
            let den = if self.eat(b'/') {
                i64::try_from(self.number()?).map_err(|_| self.err("denominator too large"))?
            } else {
                1
            };
            coeff = field
                .from_ratio(num, den)
                .ok_or_else(|| self.err("denominator vanishes in the coefficient field"))?;
            if !self.eat(b'*') {
                return Ok((Monomial::one(), coeff));
            }
        }
        loop {
            factors.push(self.factor()?);
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::from_pairs(factors), coeff))
    }

    fn polynomial<F: Field>(&mut self, field: &F) -> Result<Polynomial<F>, AlgebraError> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let (m, c) = self.term(field)?;
            terms.push((m, if negative { field.neg(&c) } else { c }));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(Polynomial::from_terms(field, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use VariableId::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn render_and_parse() {
        let k = f();
        let p = Polynomial::parse(&k, "x1*y2 - x2*y1", 0).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.render(), "x1*y2 - x2*y1");
        assert_eq!(p.render_with(&MonomialOrder::LexR, 1), "x2*y3 - x3*y2");
        assert_eq!(Polynomial::parse(&k, "x2*y3 - x3*y2", 1).unwrap(), p);

        let en = Polynomial::parse(&k, "x2*T(0,1) - x1*T(0,2) + x0*T(1,2)", 0).unwrap();
        assert_eq!(en.render(), "x0*T(1,2) - x1*T(0,2) + x2*T(0,1)");
        assert_eq!(en.rees_bidegree(), Some((1, 3)));

        let q = Polynomial::parse(&k, "-3*x0^2*T + 5 - y1", 0).unwrap();
        assert_eq!(Polynomial::parse(&k, &q.render(), 0).unwrap(), q);
        assert!(Polynomial::parse(&k, "0", 0).unwrap().is_zero());
        assert!(Polynomial::parse(&k, "x1 +", 0).is_err());
        assert!(Polynomial::parse(&k, "T(2,1)", 0).is_err());
        assert!(Polynomial::parse(&k, "x0 y1", 0).is_err());

        let r = Polynomial::parse(&Rationals, "1/2*x0 - 3/4", 0).unwrap();
        assert_eq!(r.render(), "1/2*x0 - 3/4");
    }

    #[test]
    fn arithmetic_identities() {
        let k = f();
        let a = Polynomial::parse(&k, "x0*y1 - x1*y0", 0).unwrap();
        let b = Polynomial::parse(&k, "x0 + y1", 0).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq, a.pow(2));
        assert_eq!(sq.len(), 3);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.mul(&b).sub(&b.mul(&a)), Polynomial::zero(&k));
        let t = a.sub_term_mul(&k.one(), &Monomial::one(), &a);
        assert!(t.is_zero());
        assert_eq!(
            a.leading_monomial(&MonomialOrder::LexR),
            Some(&Monomial::from_pairs([(X(0), 1), (Y(1), 1)]))
        );
        assert!(a.is_homogeneous() && !b.add(&Polynomial::constant(&k, 1)).is_homogeneous());
    }
}
