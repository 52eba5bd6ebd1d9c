//! Bigraded operators as block matrix families.
//!
//! A `GradedOperator` has a fixed bidegree shift and one matrix block per
//! source bidegree whose target is still in range; absent blocks are zero.
//! Matrix columns follow `enumerate_basis` of the source, rows of the target.
//! `OpSum` handles inhomogeneous combinations like `d = ∂ + ∂̄` or
//! `d + λ + λ̄`, grouped by shift.

use std::collections::BTreeMap;

use crate::exterior::{block_dim, enumerate_basis, gram, Bidegree, BigradedForm};
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// A bidegree shift; either slot may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Shift {
    pub dp: i32,
    pub dq: i32,
}

impl Shift {
    pub fn new(dp: i32, dq: i32) -> Self {
        Shift { dp, dq }
    }

    pub fn add(&self, other: &Shift) -> Shift {
        Shift {
            dp: self.dp + other.dp,
            dq: self.dq + other.dq,
        }
    }

    /// Total degree parity.
    pub fn parity(&self) -> usize {
        (self.dp + self.dq).rem_euclid(2) as usize
    }

    pub fn apply(&self, p: usize, q: usize) -> Option<(usize, usize)> {
        let tp = p as i32 + self.dp;
        let tq = q as i32 + self.dq;
        if tp < 0 || tq < 0 {
            None
        } else {
            Some((tp as usize, tq as usize))
        }
    }
}

/// Source bidegrees whose image under `shift` stays inside the (n+1)² grid.
fn in_range_sources(n: usize, shift: Shift) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            if let Some((tp, tq)) = shift.apply(p, q) {
                if tp <= n && tq <= n {
                    out.push((p, q));
                }
            }
        }
    }
    out
}

#[derive(Clone, PartialEq)]
pub struct GradedOperator {
    pub n: usize,
    pub shift: Shift,
    blocks: BTreeMap<(usize, usize), Mat>,
}

impl GradedOperator {
    pub fn zero(n: usize, shift: Shift) -> Self {
        let mut blocks = BTreeMap::new();
        for (p, q) in in_range_sources(n, shift) {
            let (tp, tq) = shift.apply(p, q).unwrap();
            blocks.insert((p, q), Mat::zeros(block_dim(n, tp, tq), block_dim(n, p, q)));
        }
        GradedOperator { n, shift, blocks }
    }

    /// Build the operator from its action on basis monomials. `f` must return
    /// a form whose only nonzero component is the target bidegree (checked).
    pub fn from_map(
        n: usize,
        shift: Shift,
        mut f: impl FnMut(&crate::exterior::Monomial) -> BigradedForm,
    ) -> Self {
        let mut blocks = BTreeMap::new();
        for (p, q) in in_range_sources(n, shift) {
            let (tp, tq) = shift.apply(p, q).unwrap();
            let target = Bidegree::new(tp, tq);
            let src_basis = enumerate_basis(n, Bidegree::new(p, q));
            let mut m = Mat::zeros(block_dim(n, tp, tq), src_basis.len());
            for (j, mono) in src_basis.iter().enumerate() {
                let image = f(mono);
                debug_assert!(
                    image.is_zero() || image.is_homogeneous(target),
                    "operator image not homogeneous of the target bidegree"
                );
                m.set_col(j, &image.coords(target));
            }
            blocks.insert((p, q), m);
        }
        GradedOperator { n, shift, blocks }
    }

    /// Wedge multiplication by a fixed homogeneous form.
    pub fn wedge_by(n: usize, form: &BigradedForm) -> Self {
        let degs = form.bidegrees();
        let shift = match degs.as_slice() {
            [] => Shift::new(0, 0),
            [d] => Shift::new(d.p as i32, d.q as i32),
            _ => panic!("wedge_by requires a homogeneous form"),
        };
        GradedOperator::from_map(n, shift, |m| {
            form.wedge(&BigradedForm::monomial(form.n, *m, Scalar::one()))
        })
    }

    pub fn parity(&self) -> usize {
        self.shift.parity()
    }

    pub fn block(&self, p: usize, q: usize) -> Option<&Mat> {
        self.blocks.get(&(p, q))
    }

    pub fn sources(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Mat::is_zero)
    }

    pub fn apply(&self, form: &BigradedForm) -> BigradedForm {
        assert_eq!(self.n, form.n);
        let mut out = BigradedForm::zero(self.n);
        for deg in form.bidegrees() {
            let Some(block) = self.block(deg.p, deg.q) else {
                continue;
            };
            let (tp, tq) = self.shift.apply(deg.p, deg.q).unwrap();
            let coords = block.mul_vec(&form.coords(deg));
            out = out.add(&BigradedForm::from_coords(
                self.n,
                Bidegree::new(tp, tq),
                &coords,
            ));
        }
        out
    }

    /// Composition self ∘ rhs (rhs applied first). An intermediate bidegree
    /// falling out of range contributes the zero block.
    pub fn compose(&self, rhs: &GradedOperator) -> GradedOperator {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let shift = self.shift.add(&rhs.shift);
        let mut blocks = BTreeMap::new();
        for (p, q) in in_range_sources(n, shift) {
            let (tp, tq) = shift.apply(p, q).unwrap();
            let out_rows = block_dim(n, tp, tq);
            let out_cols = block_dim(n, p, q);
            let mid = rhs.shift.apply(p, q);
            let block = match mid {
                Some((mp, mq)) if mp <= n && mq <= n => {
                    match (self.block(mp, mq), rhs.block(p, q)) {
                        (Some(a), Some(b)) => a.mul(b),
                        _ => Mat::zeros(out_rows, out_cols),
                    }
                }
                _ => Mat::zeros(out_rows, out_cols),
            };
            blocks.insert((p, q), block);
        }
        GradedOperator { n, shift, blocks }
    }

    pub fn add(&self, rhs: &GradedOperator) -> GradedOperator {
        assert_eq!(self.n, rhs.n);
        assert_eq!(
            self.shift, rhs.shift,
            "adding operators of different shifts"
        );
        let blocks = self
            .blocks
            .iter()
            .map(|(k, m)| (*k, m.add(rhs.blocks.get(k).expect("same key set"))))
            .collect();
        GradedOperator {
            n: self.n,
            shift: self.shift,
            blocks,
        }
    }

    pub fn sub(&self, rhs: &GradedOperator) -> GradedOperator {
        self.add(&rhs.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> GradedOperator {
        let blocks = self.blocks.iter().map(|(k, m)| (*k, m.scale(s))).collect();
        GradedOperator {
            n: self.n,
            shift: self.shift,
            blocks,
        }
    }

    /// The metric adjoint with respect to the block Gram matrices; shift is
    /// negated.
    pub fn gram_adjoint(&self) -> GradedOperator {
        let n = self.n;
        let shift = Shift::new(-self.shift.dp, -self.shift.dq);
        let mut blocks = BTreeMap::new();
        for ((p, q), m) in &self.blocks {
            let (tp, tq) = self.shift.apply(*p, *q).unwrap();
            let g_src = gram(n, Bidegree::new(*p, *q));
            let g_dst = gram(n, Bidegree::new(tp, tq));
            let adj = m.gram_adjoint(&g_src, &g_dst).expect("power-of-two gram");
            blocks.insert((tp, tq), adj);
        }
        // sources of the adjoint whose original block was absent map to zero
        for (p, q) in in_range_sources(n, shift) {
            let (tp, tq) = shift.apply(p, q).unwrap();
            blocks
                .entry((p, q))
                .or_insert_with(|| Mat::zeros(block_dim(n, tp, tq), block_dim(n, p, q)));
        }
        GradedOperator { n, shift, blocks }
    }

    /// The conjugate operator `conj ∘ T ∘ conj`; shift slots swap.
    pub fn conj_op(&self) -> GradedOperator {
        let n = self.n;
        let shift = Shift::new(self.shift.dq, self.shift.dp);
        GradedOperator::from_map(n, shift, |m| {
            let form = BigradedForm::monomial(n, *m, Scalar::one()).conj();
            self.apply(&form).conj()
        })
    }
}

impl std::fmt::Debug for GradedOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GradedOperator(n={}, shift=({},{}), {} blocks)",
            self.n,
            self.shift.dp,
            self.shift.dq,
            self.blocks.len()
        )
    }
}

/// Graded commutator [a,b] = a∘b − (−1)^{|a||b|} b∘a.
pub fn graded_commutator(a: &GradedOperator, b: &GradedOperator) -> GradedOperator {
    let ab = a.compose(b);
    let ba = b.compose(a);
    if a.parity() * b.parity() % 2 == 1 {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    }
}

/// A finite sum of graded operators of distinct shifts. Used for the full
/// differential `d = ∂ + ∂̄` and for inhomogeneous squares like
/// `(d + λ + λ̄)²`.
#[derive(Clone)]
pub struct OpSum {
    pub n: usize,
    parts: BTreeMap<Shift, GradedOperator>,
}

impl OpSum {
    pub fn new(n: usize) -> Self {
        OpSum {
            n,
            parts: BTreeMap::new(),
        }
    }

    pub fn from_parts(parts: Vec<GradedOperator>) -> Self {
        assert!(!parts.is_empty());
        let n = parts[0].n;
        let mut sum = OpSum::new(n);
        for p in parts {
            sum.add_part(p);
        }
        sum
    }

    pub fn add_part(&mut self, op: GradedOperator) {
        assert_eq!(self.n, op.n);
        match self.parts.remove(&op.shift) {
            Some(existing) => {
                self.parts.insert(op.shift, existing.add(&op));
            }
            None => {
                self.parts.insert(op.shift, op);
            }
        }
    }

    pub fn parts(&self) -> impl Iterator<Item = &GradedOperator> {
        self.parts.values()
    }

    pub fn apply(&self, form: &BigradedForm) -> BigradedForm {
        let mut out = BigradedForm::zero(self.n);
        for p in self.parts.values() {
            out = out.add(&p.apply(form));
        }
        out
    }

    pub fn compose(&self, rhs: &OpSum) -> OpSum {
        let mut out = OpSum::new(self.n);
        for a in self.parts.values() {
            for b in rhs.parts.values() {
                out.add_part(a.compose(b));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.parts.values().all(GradedOperator::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Monomial;

    /// Wedge by omega on the flat torus, the simplest nontrivial operator.
    fn torus_lefschetz(n: usize) -> GradedOperator {
        let mut omega = BigradedForm::zero(n);
        for k in 1..=n {
            omega = omega.add(
                &BigradedForm::phi(n, k)
                    .wedge(&BigradedForm::phibar(n, k))
                    .scale(&Scalar::from_ratio_i(1, 2)),
            );
        }
        GradedOperator::wedge_by(n, &omega)
    }

    #[test]
    fn lefschetz_weight_on_torus() {
        // H = [L, Λ] acts as (p+q-n)·id; direct matrix computation oracle
        for n in 1..=3usize {
            let l = torus_lefschetz(n);
            let lam = l.gram_adjoint();
            let h = graded_commutator(&l, &lam);
            for p in 0..=n {
                for q in 0..=n {
                    let d = block_dim(n, p, q);
                    let expected =
                        Mat::identity(d).scale(&Scalar::from_int(p as i64 + q as i64 - n as i64));
                    assert_eq!(h.block(p, q).unwrap(), &expected, "H at ({p},{q}), n={n}");
                }
            }
        }
    }

    #[test]
    fn lefschetz_vanishes_at_top() {
        let n = 2;
        let l = torus_lefschetz(n);
        // L on (n,n) has no in-range target: absent block means zero operator
        assert!(l.block(n, n).is_none());
        let top = enumerate_basis(n, Bidegree::new(n, n));
        let f = BigradedForm::monomial(n, top[0], Scalar::one());
        assert!(l.apply(&f).is_zero());
    }

    #[test]
    fn commutator_even_odd_signs() {
        let n = 2;
        let l = torus_lefschetz(n);
        // [L, L] = 0 for the even bracket
        assert!(graded_commutator(&l, &l).is_zero());
        // odd self-bracket doubles the square: [δ, δ] = 2δ² exercised on a
        // rank-one odd operator built from a wedge
        let odd = GradedOperator::wedge_by(n, &BigradedForm::phi(n, 1));
        let sq = odd.compose(&odd);
        assert!(sq.is_zero()); // phi1 ∧ phi1 = 0
        assert!(graded_commutator(&odd, &odd).is_zero());
        // two distinct odd operators anticommute when their forms do
        let a = GradedOperator::wedge_by(n, &BigradedForm::phi(n, 1));
        let b = GradedOperator::wedge_by(n, &BigradedForm::phi(n, 2));
        let br = graded_commutator(&a, &b);
        // phi1∧phi2∧· + phi2∧phi1∧· = 0
        assert!(br.is_zero());
    }

    #[test]
    fn adjoint_involutive_and_reverses_composition() {
        let n = 2;
        let l = torus_lefschetz(n);
        let a = GradedOperator::wedge_by(n, &BigradedForm::phi(n, 1));
        assert_eq!(l.gram_adjoint().gram_adjoint(), l);
        let la = l.compose(&a);
        assert_eq!(
            la.gram_adjoint(),
            a.gram_adjoint().compose(&l.gram_adjoint())
        );
    }

    #[test]
    fn conj_of_wedge_operator() {
        let n = 2;
        let a = GradedOperator::wedge_by(n, &BigradedForm::phi(n, 1).scale(&Scalar::i()));
        let expect = GradedOperator::wedge_by(n, &BigradedForm::phibar(n, 1).scale(&-Scalar::i()));
        assert_eq!(a.conj_op(), expect);
        assert_eq!(a.conj_op().conj_op(), a);
    }

    #[test]
    fn opsum_square_of_odd_sum() {
        let n = 2;
        let a = GradedOperator::wedge_by(n, &BigradedForm::phi(n, 1));
        let b = GradedOperator::wedge_by(n, &BigradedForm::phibar(n, 1));
        let s = OpSum::from_parts(vec![a, b]);
        // (phi1 + phibar1) ∧ (phi1 + phibar1) ∧ x = 0
        assert!(s.compose(&s).is_zero());
    }

    #[test]
    fn apply_matches_blocks() {
        let n = 2;
        let l = torus_lefschetz(n);
        let m = Monomial { holo: 1, anti: 2 }; // phi1 ∧ phibar2
        let f = BigradedForm::monomial(n, m, Scalar::from_int(3));
        let lf = l.apply(&f);
        assert!(lf.is_homogeneous(Bidegree::new(2, 2)));
        let coords = l
            .block(1, 1)
            .unwrap()
            .mul_vec(&f.coords(Bidegree::new(1, 1)));
        assert_eq!(lf.coords(Bidegree::new(2, 2)), coords);
    }
}
