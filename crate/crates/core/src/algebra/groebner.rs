//! Multivariate division and Buchberger's algorithm.

use std::collections::HashSet;

use super::field::Field;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::AlgebraError;

/// Quotients and remainder of a division: `f = sum(q_i * b_i) + r`.
#[derive(Debug, Clone)]
pub struct Division<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

fn leading_terms<F: Field>(basis: &[Polynomial<F>], order: &MonomialOrder) -> Vec<(Monomial, F::Elem)> {
    basis
        .iter()
        .map(|b| {
            let (m, c) = b.leading_term(order).expect("division by the zero polynomial");
            (m.clone(), c.clone())
        })
        .collect()
}

fn reduce<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    leads: &[(Monomial, F::Elem)],
    order: &MonomialOrder,
    mut quotients: Option<&mut Vec<Vec<(Monomial, F::Elem)>>>,
) -> Polynomial<F> {
    let field = f.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.leading_term(order) {
        let (lm, lc) = (lm.clone(), lc.clone());
        match leads.iter().position(|(m, _)| m.divides(&lm)) {
            Some(i) => {
                let q = lm.div(&leads[i].0).expect("divisibility checked");
                let c = field.div(&lc, &leads[i].1);
                p = p.sub_term_mul(&c, &q, &basis[i]);
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[i].push((q, c));
                }
            }
            None => {
                p = p.sub(&Polynomial::term(field, lm.clone(), lc.clone()));
                rem.push((lm, lc));
            }
        }
    }
    Polynomial::from_terms(field, rem)
}

/// Division with remainder, reducing by the first basis element whose
/// leading monomial divides the current leading monomial.
pub fn divide<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: &MonomialOrder) -> Division<F> {
    let leads = leading_terms(basis, order);
    let mut qs = vec![Vec::new(); basis.len()];
    let remainder = reduce(f, basis, &leads, order, Some(&mut qs));
    let field = f.field();
    Division {
        quotients: qs.into_iter().map(|t| Polynomial::from_terms(field, t)).collect(),
        remainder,
    }
}

/// Remainder of [`divide`]: no monomial of the result is divisible by a
/// leading monomial of `basis`.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: &MonomialOrder) -> Polynomial<F> {
    let leads = leading_terms(basis, order);
    reduce(f, basis, &leads, order, None)
}

/// Reusable reducer for many normal forms against one basis.
#[derive(Debug, Clone)]
pub struct Reducer<F: Field> {
    basis: Vec<Polynomial<F>>,
    leads: Vec<(Monomial, F::Elem)>,
    order: MonomialOrder,
}

impl<F: Field> Reducer<F> {
    pub fn new(basis: Vec<Polynomial<F>>, order: MonomialOrder) -> Self {
        let leads = leading_terms(&basis, &order);
        Reducer { basis, leads, order }
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.leads.iter().map(|l| &l.0)
    }

    /// Whether `m` lies in the initial ideal.
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.leads.iter().any(|(l, _)| l.divides(m))
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        reduce(f, &self.basis, &self.leads, &self.order, None)
    }
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: &MonomialOrder) -> Polynomial<F> {
    let field = f.field();
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).expect("lcm"), &field.inv(fc));
    let b = g.mul_term(&l.div(gm).expect("lcm"), &field.inv(gc));
    a.sub(&b)
}

/// Every S-polynomial of a pair of `gens` reduces to zero against `gens`.
/// Pairs with coprime leading monomials are skipped (Buchberger's first
/// criterion).
pub fn is_groebner<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> bool {
    let reducer = Reducer::new(gens.to_vec(), order.clone());
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (a, b) = (&reducer.leads[i].0, &reducer.leads[j].0);
            if a.is_coprime(b) {
                continue;
            }
            if !reducer.normal_form(&s_polynomial(&gens[i], &gens[j], order)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced Gröbner basis: monic, sorted by leading monomial descending.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Vec<Polynomial<F>> {
    buchberger_with_budget(gens, order, None).expect("no budget set")
}

/// [`buchberger`] that gives up after `budget` S-pair reductions.
pub fn buchberger_with_budget<F: Field>(
    gens: &[Polynomial<F>],
    order: &MonomialOrder,
    budget: Option<usize>,
) -> Result<Vec<Polynomial<F>>, AlgebraError> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut pending: Vec<(usize, usize, Monomial)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let push = |p: Polynomial<F>,
                basis: &mut Vec<Polynomial<F>>,
                leads: &mut Vec<Monomial>,
                pending: &mut Vec<(usize, usize, Monomial)>,
                pending_set: &mut HashSet<(usize, usize)>| {
        let p = p.monic(order);
        let lm = p.leading_monomial(order).expect("nonzero").clone();
        let k = basis.len();
        for (i, l) in leads.iter().enumerate() {
            pending.push((i, k, l.lcm(&lm)));
            pending_set.insert((i, k));
        }
        basis.push(p);
        leads.push(lm);
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        push(g.clone(), &mut basis, &mut leads, &mut pending, &mut pending_set);
    }

    let mut steps = 0usize;
    while !pending.is_empty() {
        // normal strategy: smallest lcm first
        let pos = (0..pending.len())
            .min_by(|&a, &b| order.cmp(&pending[a].2, &pending[b].2))
            .expect("nonempty");
        let (i, j, lcm) = pending.swap_remove(pos);
        pending_set.remove(&(i, j));

        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        steps += 1;
        if let Some(limit) = budget {
            if steps > limit {
                return Err(AlgebraError::BudgetExceeded { steps: limit });
            }
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pending, &mut pending_set);
        }
    }
    Ok(reduce_basis(basis, order))
}

/// Minimalizes, interreduces and normalizes a Gröbner basis.
pub fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>, order: &MonomialOrder) -> Vec<Polynomial<F>> {
    let leads: Vec<Monomial> =
        basis.iter().map(|b| b.leading_monomial(order).expect("nonzero").clone()).collect();
    let mut keep = Vec::new();
    for (i, li) in leads.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, lj)| j != i && lj.divides(li) && (lj != li || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<Polynomial<F>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Polynomial<F>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            // the lead survives: no other lead divides it
            let lead = minimal[i].leading_term(order).expect("nonzero");
            let head = Polynomial::term(minimal[i].field(), lead.0.clone(), lead.1.clone());
            let tail = minimal[i].sub(&head);
            let tail = if others.is_empty() { tail } else { normal_form(&tail, &others, order) };
            head.add(&tail).monic(order)
        })
        .collect();
    reduced.sort_by(|a, b| {
        order.cmp(b.leading_monomial(order).expect("nonzero"), a.leading_monomial(order).expect("nonzero"))
    });
    reduced
}
