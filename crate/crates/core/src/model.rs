//! Coalgebra input, validation, and construction of the Hermitian operator
//! family.
//!
//! A structure is described by a unitary (1,0)-coframe `phi_1..phi_n` and the
//! differentials `d phi_k`, each a 2-form with (2,0) and (1,1) parts only
//! (integrability). The差 differential extends as a degree-1 derivation with
//! `d phibar_k = conj(d phi_k)`, and must square to zero. From a validated
//! spec we build `∂`, `∂̄`, the fundamental form `ω`, the Lefschetz pair
//! `L, Λ`, the wedge operators `λ = (∂ω ∧ ·)`, `λ̄ = (∂̄ω ∧ ·)`, the torsion
//! operators `τ = [Λ, λ]`, `τ̄ = [Λ, λ̄]`, and all metric adjoints.
//!
//! Two constructions are cross-checked at build time: `λ` as the commutator
//! `[∂, L]` must agree with the wedge by `∂ω`, and `H = [L, Λ]` must act as
//! the scalar `p + q − n` on every block. A failure of either aborts the
//! build with a convention diagnostic.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exterior::{enumerate_basis, Bidegree, BigradedForm, Monomial};
use crate::linalg::Mat;
use crate::operator::{graded_commutator, GradedOperator, OpSum, Shift};
use crate::scalar::Scalar;

pub mod parse;

/// Maximum supported complex dimension; keeps bitmask monomials comfortable
/// and block sizes sane.
pub const MAX_DIM: usize = 8;

/// The input datum: complex dimension, a label, and `d phi_k` for each k.
#[derive(Clone, Debug)]
pub struct CoalgebraSpec {
    pub name: String,
    pub n: usize,
    /// `d_phi[k-1]` is d(phi_k); zero form when omitted. Each is validated to
    /// have only (2,0) and (1,1) components.
    pub d_phi: Vec<BigradedForm>,
}

#[derive(Debug, Error)]
pub enum ValidationError {
    #[error("complex dimension must be between 1 and {MAX_DIM}, got {0}")]
    BadDimension(usize),
    #[error("integrability violated: d phi{k} contains the (0,2) term {term}")]
    NotIntegrable { k: usize, term: String },
    #[error("d phi{k} contains a term of degree != 2: {term}")]
    WrongDegree { k: usize, term: String },
    #[error("d is not square-zero: dd(phi{k}) = {value}")]
    DSquared { k: usize, value: String },
}

impl CoalgebraSpec {
    /// All-zero differential: the complex torus.
    pub fn torus(n: usize, name: &str) -> Self {
        CoalgebraSpec {
            name: name.to_string(),
            n,
            d_phi: vec![BigradedForm::zero(n); n],
        }
    }

    /// The Kodaira-Thurston 4-manifold: bracket [X,Y] = -Z with JX = Y,
    /// JZ = W gives the complex coframe phi1 = x+iy, phi2 = z+iw and
    /// d phi2 = (i/2) phi1 ∧ phibar1.
    pub fn kodaira_thurston() -> Self {
        let n = 2;
        let dphi2 = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phibar(n, 1))
            .scale(&Scalar::from_ratio_i(1, 2));
        CoalgebraSpec {
            name: "kodaira_thurston".into(),
            n,
            d_phi: vec![BigradedForm::zero(n), dphi2],
        }
    }

    /// The Iwasawa 6-manifold: d phi3 = -phi1 ∧ phi2.
    pub fn iwasawa() -> Self {
        let n = 3;
        let dphi3 = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phi(n, 2))
            .scale(&Scalar::from_int(-1));
        CoalgebraSpec {
            name: "iwasawa".into(),
            n,
            d_phi: vec![BigradedForm::zero(n), BigradedForm::zero(n), dphi3],
        }
    }

    /// Check bidegree constraints and d² = 0 (the Jacobi identity of the dual
    /// Lie algebra). Checking d²(phi_k) for every k suffices: d² is an even
    /// derivation and d²(phibar_k) is its conjugate.
    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.n == 0 || self.n > MAX_DIM {
            return Err(ValidationError::BadDimension(self.n));
        }
        assert_eq!(self.d_phi.len(), self.n);
        for (idx, form) in self.d_phi.iter().enumerate() {
            let k = idx + 1;
            for (m, c) in form.terms() {
                let d = m.bidegree();
                if d.total() != 2 {
                    return Err(ValidationError::WrongDegree {
                        k,
                        term: format!("({}) {}", c, m.label()),
                    });
                }
                if d == Bidegree::new(0, 2) {
                    return Err(ValidationError::NotIntegrable {
                        k,
                        term: format!("({}) {}", c, m.label()),
                    });
                }
            }
        }
        for idx in 0..self.n {
            let dd = self.d(&self.d_phi[idx]);
            if !dd.is_zero() {
                return Err(ValidationError::DSquared {
                    k: idx + 1,
                    value: dd.label(),
                });
            }
        }
        Ok(())
    }

    /// d of a single generator: phi_k has the prescribed differential,
    /// phibar_k the conjugate one.
    fn d_generator(&self, k: usize, conjugated: bool) -> BigradedForm {
        let f = &self.d_phi[k - 1];
        if conjugated {
            f.conj()
        } else {
            f.clone()
        }
    }

    /// Degree-1 derivation extension of d to an arbitrary form.
    pub fn d(&self, form: &BigradedForm) -> BigradedForm {
        let mut out = BigradedForm::zero(self.n);
        for (m, c) in form.terms() {
            let mut sign = Scalar::one();
            // phi factors first, then phibar factors: canonical order
            for k in m.holo_indices() {
                let rest = Monomial {
                    holo: m.holo & !(1 << (k - 1)),
                    anti: m.anti,
                };
                let df = self.d_generator(k, false);
                // df is even (degree 2), so it moves to the front freely
                let term = df.wedge(&BigradedForm::monomial(self.n, rest, &sign * c));
                out = out.add(&term);
                sign = -&sign;
            }
            for k in m.anti_indices() {
                let rest = Monomial {
                    holo: m.holo,
                    anti: m.anti & !(1 << (k - 1)),
                };
                let df = self.d_generator(k, true);
                let term = df.wedge(&BigradedForm::monomial(self.n, rest, &sign * c));
                out = out.add(&term);
                sign = -&sign;
            }
        }
        out
    }

    /// The structure obtained by rescaling the coframe `phi_k -> c·phi_k`
    /// for a positive rational c; structure coefficients scale by 1/c.
    pub fn rescaled(&self, c: &Scalar) -> CoalgebraSpec {
        assert!(
            c.is_real() && !c.is_zero(),
            "rescale factor must be real nonzero"
        );
        let inv = c.recip();
        CoalgebraSpec {
            name: format!("{}_x{}", self.name, c),
            n: self.n,
            d_phi: self.d_phi.iter().map(|f| f.scale(&inv)).collect(),
        }
    }
}

/// Names of the homogeneous operators carried by a built structure.
/// `Lambda` is the metric adjoint of `L`; `Lam`/`LamBar` are the wedge
/// operators by ∂ω and ∂̄ω; `Tau`/`TauBar` the zero-order torsion operators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum OpName {
    Del,
    DelBar,
    L,
    Lambda,
    Lam,
    LamBar,
    Tau,
    TauBar,
}

impl OpName {
    pub const ALL: [OpName; 8] = [
        OpName::Del,
        OpName::DelBar,
        OpName::L,
        OpName::Lambda,
        OpName::Lam,
        OpName::LamBar,
        OpName::Tau,
        OpName::TauBar,
    ];

    /// The six operators entering the combined Laplacian.
    pub const BOX_SUMMANDS: [OpName; 6] = [
        OpName::Del,
        OpName::DelBar,
        OpName::Tau,
        OpName::TauBar,
        OpName::Lam,
        OpName::LamBar,
    ];

    /// Partner under complex conjugation.
    pub fn conj_partner(&self) -> OpName {
        match self {
            OpName::Del => OpName::DelBar,
            OpName::DelBar => OpName::Del,
            OpName::L => OpName::L,
            OpName::Lambda => OpName::Lambda,
            OpName::Lam => OpName::LamBar,
            OpName::LamBar => OpName::Lam,
            OpName::Tau => OpName::TauBar,
            OpName::TauBar => OpName::Tau,
        }
    }

    pub fn display(&self) -> &'static str {
        match self {
            OpName::Del => "del",
            OpName::DelBar => "delbar",
            OpName::L => "L",
            OpName::Lambda => "Lambda",
            OpName::Lam => "lambda",
            OpName::LamBar => "lambdabar",
            OpName::Tau => "tau",
            OpName::TauBar => "taubar",
        }
    }
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("internal convention error: H = [L,Lambda] is not the scalar p+q-n on block ({p},{q}); {detail}")]
    HNotScalar { p: usize, q: usize, detail: String },
    #[error("internal convention error: lambda from [del,L] disagrees with wedge by del(omega) on block ({p},{q})")]
    LambdaMismatch { p: usize, q: usize },
}

/// Deliberate sabotage for exercising failure exit paths end to end.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Injection {
    /// Perturb omega before building L so the H scalar check fails.
    ConventionFailure,
    /// Perturb tau after a successful build so the identity suite fails.
    IdentityFailure,
}

/// A validated structure with its full operator family.
pub struct HermitianStructure {
    pub spec: CoalgebraSpec,
    pub omega: BigradedForm,
    /// ∂ω, the (2,1) part of dω; λ is the wedge by this form.
    pub del_omega: BigradedForm,
    /// ∂̄ω = conj(∂ω).
    pub delbar_omega: BigradedForm,
    /// ∂∂̄ω; zero exactly when the metric is pluri-closed.
    pub ddbar_omega: BigradedForm,
    ops: BTreeMap<OpName, GradedOperator>,
    adjoints: BTreeMap<OpName, GradedOperator>,
    /// Hodge star blocks per source bidegree (the target bidegree varies, so
    /// the star is not a single graded operator).
    star_blocks: BTreeMap<(usize, usize), Mat>,
}

impl HermitianStructure {
    pub fn build(spec: CoalgebraSpec) -> Result<Self, BuildError> {
        Self::build_with(spec, None)
    }

    pub fn build_with(spec: CoalgebraSpec, inject: Option<Injection>) -> Result<Self, BuildError> {
        let n = spec.n;

        // omega = (i/2) Σ phi_k ∧ phibar_k, the positive (1,1)-form of the
        // declared unitary coframe
        let mut omega = BigradedForm::zero(n);
        for k in 1..=n {
            omega = omega.add(
                &BigradedForm::phi(n, k)
                    .wedge(&BigradedForm::phibar(n, k))
                    .scale(&Scalar::from_ratio_i(1, 2)),
            );
        }
        debug_assert_eq!(omega.conj(), omega, "omega must be real");
        debug_assert_eq!(
            omega_top_power(&omega, n),
            crate::exterior::volume_form(n),
            "omega^n/n! must equal the orientation volume form"
        );

        let omega_used = match inject {
            Some(Injection::ConventionFailure) => omega.scale(&Scalar::from_int(2)),
            _ => omega.clone(),
        };

        // d split into its two bidegree components
        let del = GradedOperator::from_map(n, Shift::new(1, 0), |m| {
            let f = BigradedForm::monomial(n, *m, Scalar::one());
            let d = m.bidegree();
            spec.d(&f).component(Bidegree::new(d.p + 1, d.q))
        });
        let delbar = GradedOperator::from_map(n, Shift::new(0, 1), |m| {
            let f = BigradedForm::monomial(n, *m, Scalar::one());
            let d = m.bidegree();
            spec.d(&f).component(Bidegree::new(d.p, d.q + 1))
        });

        // integrability means d has no other components; cheap spot check
        debug_assert!({
            let f = omega.clone();
            let df = spec.d(&f);
            df.bidegrees()
                .iter()
                .all(|d| *d == Bidegree::new(2, 1) || *d == Bidegree::new(1, 2))
        });

        let l_op = GradedOperator::wedge_by(n, &omega_used);
        let lambda = l_op.gram_adjoint();
        let h_op = graded_commutator(&l_op, &lambda);
        for p in 0..=n {
            for q in 0..=n {
                let dim = crate::exterior::block_dim(n, p, q);
                let expected =
                    Mat::identity(dim).scale(&Scalar::from_int(p as i64 + q as i64 - n as i64));
                let got = h_op.block(p, q).expect("H has shift (0,0)");
                if got != &expected {
                    return Err(BuildError::HNotScalar {
                        p,
                        q,
                        detail: format!(
                            "first row of the block is {:?}",
                            (0..dim)
                                .map(|c| got.at(0, c).to_string())
                                .collect::<Vec<_>>()
                        ),
                    });
                }
            }
        }

        let d_omega = spec.d(&omega);
        let del_omega = d_omega.component(Bidegree::new(2, 1));
        let delbar_omega = d_omega.component(Bidegree::new(1, 2));
        debug_assert_eq!(delbar_omega, del_omega.conj());
        let ddbar_omega = spec.d(&delbar_omega).component(Bidegree::new(2, 2));

        // lambda both ways: commutator [∂, L] and wedge by ∂ω
        let lam_comm = graded_commutator(&del, &l_op);
        let lam_wedge = wedge_by_with_shift(n, &del_omega, Shift::new(2, 1));
        for (p, q) in lam_comm.sources().collect::<Vec<_>>() {
            if lam_comm.block(p, q) != lam_wedge.block(p, q) {
                return Err(BuildError::LambdaMismatch { p, q });
            }
        }
        let lambar_comm = graded_commutator(&delbar, &l_op);
        let lambar_wedge = wedge_by_with_shift(n, &delbar_omega, Shift::new(1, 2));
        for (p, q) in lambar_comm.sources().collect::<Vec<_>>() {
            if lambar_comm.block(p, q) != lambar_wedge.block(p, q) {
                return Err(BuildError::LambdaMismatch { p, q });
            }
        }

        let mut tau = graded_commutator(&lambda, &lam_comm);
        let taubar = graded_commutator(&lambda, &lambar_comm);

        if inject == Some(Injection::IdentityFailure) {
            tau = perturb_first_block(tau);
        }

        let mut ops = BTreeMap::new();
        ops.insert(OpName::Del, del);
        ops.insert(OpName::DelBar, delbar);
        ops.insert(OpName::L, l_op);
        ops.insert(OpName::Lambda, lambda);
        ops.insert(OpName::Lam, lam_comm);
        ops.insert(OpName::LamBar, lambar_comm);
        ops.insert(OpName::Tau, tau);
        ops.insert(OpName::TauBar, taubar);

        let adjoints = ops
            .iter()
            .map(|(name, op)| (*name, op.gram_adjoint()))
            .collect();

        let mut star_blocks = BTreeMap::new();
        for p in 0..=n {
            for q in 0..=n {
                let deg = Bidegree::new(p, q);
                let target = Bidegree::new(n - q, n - p);
                let basis = enumerate_basis(n, deg);
                let mut m = Mat::zeros(crate::exterior::block_dim(n, n - q, n - p), basis.len());
                for (j, mono) in basis.iter().enumerate() {
                    let starred = BigradedForm::monomial(n, *mono, Scalar::one()).hodge_star();
                    m.set_col(j, &starred.coords(target));
                }
                star_blocks.insert((p, q), m);
            }
        }

        Ok(HermitianStructure {
            spec,
            omega,
            del_omega,
            delbar_omega,
            ddbar_omega,
            ops,
            adjoints,
            star_blocks,
        })
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn op(&self, name: OpName) -> &GradedOperator {
        &self.ops[&name]
    }

    /// Cached metric adjoint of a named operator.
    pub fn adjoint(&self, name: OpName) -> &GradedOperator {
        &self.adjoints[&name]
    }

    /// The full differential d = ∂ + ∂̄ as a shift-indexed sum.
    pub fn d_sum(&self) -> OpSum {
        OpSum::from_parts(vec![
            self.op(OpName::Del).clone(),
            self.op(OpName::DelBar).clone(),
        ])
    }

    /// Hodge star block on A^{p,q}, mapping to A^{n-q,n-p}.
    pub fn star_block(&self, p: usize, q: usize) -> &Mat {
        &self.star_blocks[&(p, q)]
    }

    /// The metric is pluri-closed iff ∂∂̄ω = 0.
    pub fn is_pluriclosed(&self) -> bool {
        self.ddbar_omega.is_zero()
    }

    pub fn is_kahler(&self) -> bool {
        self.del_omega.is_zero() && self.delbar_omega.is_zero()
    }
}

/// Wedge by a form that may be zero, with the shift given explicitly so the
/// zero form still produces a zero operator of the right shift.
fn wedge_by_with_shift(n: usize, form: &BigradedForm, shift: Shift) -> GradedOperator {
    if form.is_zero() {
        GradedOperator::zero(n, shift)
    } else {
        let op = GradedOperator::wedge_by(n, form);
        assert_eq!(op.shift, shift);
        op
    }
}

fn omega_top_power(omega: &BigradedForm, n: usize) -> BigradedForm {
    let mut acc = BigradedForm::one(n);
    for _ in 0..n {
        acc = acc.wedge(omega);
    }
    let mut factorial = 1i64;
    for k in 2..=n as i64 {
        factorial *= k;
    }
    acc.scale(&Scalar::from_ratio(1, factorial))
}

/// Add 1 to the first entry of the first nonempty block; used only by the
/// identity-failure injection.
fn perturb_first_block(op: GradedOperator) -> GradedOperator {
    let n = op.n;
    let shift = op.shift;
    let target = op
        .sources()
        .find(|(p, q)| {
            let m = op.block(*p, *q).unwrap();
            m.rows() > 0 && m.cols() > 0
        })
        .expect("operator with at least one block");
    GradedOperator::from_map(n, shift, |mono| {
        let f = BigradedForm::monomial(n, *mono, Scalar::one());
        let deg = mono.bidegree();
        let mut image = op.apply(&f);
        if (deg.p, deg.q) == target {
            let basis = enumerate_basis(n, deg);
            if *mono == basis[0] {
                let (tp, tq) = shift.apply(deg.p, deg.q).unwrap();
                let tbasis = enumerate_basis(n, Bidegree::new(tp, tq));
                image = image.add(&BigradedForm::monomial(n, tbasis[0], Scalar::one()));
            }
        }
        image
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kodaira_thurston() -> CoalgebraSpec {
        CoalgebraSpec::kodaira_thurston()
    }

    fn iwasawa() -> CoalgebraSpec {
        CoalgebraSpec::iwasawa()
    }

    #[test]
    fn validation_accepts_examples() {
        assert!(CoalgebraSpec::torus(2, "t2").validate().is_ok());
        assert!(kodaira_thurston().validate().is_ok());
        assert!(iwasawa().validate().is_ok());
    }

    #[test]
    fn validation_rejects_non_integrable() {
        let n = 2;
        let bad = BigradedForm::phibar(n, 1).wedge(&BigradedForm::phibar(n, 2));
        let spec = CoalgebraSpec {
            name: "bad".into(),
            n,
            d_phi: vec![bad, BigradedForm::zero(n)],
        };
        match spec.validate() {
            Err(ValidationError::NotIntegrable { k: 1, term }) => {
                assert!(term.contains("phibar1^phibar2"), "{term}");
            }
            other => panic!("expected integrability failure, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_d_squared() {
        // n = 3: dphi3 = phi2∧phibar2 with dphi2 = phi1∧phibar1 breaks d² = 0
        let n = 3;
        let spec = CoalgebraSpec {
            name: "dd".into(),
            n,
            d_phi: vec![
                BigradedForm::zero(n),
                BigradedForm::phi(n, 1).wedge(&BigradedForm::phibar(n, 1)),
                BigradedForm::phi(n, 2).wedge(&BigradedForm::phibar(n, 2)),
            ],
        };
        match spec.validate() {
            Err(ValidationError::DSquared { k: 3, .. }) => {}
            other => panic!("expected d² failure, got {other:?}"),
        }
    }

    #[test]
    fn torus_operators_vanish() {
        let h = HermitianStructure::build(CoalgebraSpec::torus(2, "t2")).unwrap();
        assert!(h.op(OpName::Del).is_zero());
        assert!(h.op(OpName::DelBar).is_zero());
        assert!(h.op(OpName::Lam).is_zero());
        assert!(h.op(OpName::LamBar).is_zero());
        assert!(h.op(OpName::Tau).is_zero());
        assert!(h.op(OpName::TauBar).is_zero());
        assert!(h.is_kahler());
        assert!(h.is_pluriclosed());
    }

    #[test]
    fn kt_differential_split() {
        let h = HermitianStructure::build(kodaira_thurston()).unwrap();
        let n = 2;
        let phi2 = BigradedForm::phi(n, 2);
        // del(phi2) = 0; delbar(phi2) = (i/2) phi1∧phibar1
        assert!(h.op(OpName::Del).apply(&phi2).is_zero());
        let expected = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phibar(n, 1))
            .scale(&Scalar::from_ratio_i(1, 2));
        assert_eq!(h.op(OpName::DelBar).apply(&phi2), expected);
        // d = del + delbar as a shift-indexed sum agrees with the raw
        // derivation, and squares to zero
        assert_eq!(h.d_sum().apply(&phi2), h.spec.d(&phi2));
        assert!(h.d_sum().compose(&h.d_sum()).is_zero());
    }

    #[test]
    fn iwasawa_differential_split() {
        let h = HermitianStructure::build(iwasawa()).unwrap();
        let n = 3;
        let phi3 = BigradedForm::phi(n, 3);
        let expected = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phi(n, 2))
            .scale(&Scalar::from_int(-1));
        assert_eq!(h.op(OpName::Del).apply(&phi3), expected);
        assert!(h.op(OpName::DelBar).apply(&phi3).is_zero());
    }

    #[test]
    fn kt_torsion_forms() {
        let h = HermitianStructure::build(kodaira_thurston()).unwrap();
        // dω = -(1/4) (phi1∧phibar1∧phibar2 + phi1∧phi2∧phibar1)
        let n = 2;
        let quarter = Scalar::from_ratio(-1, 4);
        let expected_del = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phi(n, 2))
            .wedge(&BigradedForm::phibar(n, 1))
            .scale(&quarter);
        assert_eq!(h.del_omega, expected_del);
        assert_eq!(h.delbar_omega, expected_del.conj());
        assert!(!h.is_kahler());
        // lambda-bar has bidegree (1,2)
        assert_eq!(h.op(OpName::LamBar).shift, Shift::new(1, 2));
        // KT is pluri-closed
        assert!(h.is_pluriclosed());
    }

    #[test]
    fn iwasawa_not_pluriclosed() {
        let h = HermitianStructure::build(iwasawa()).unwrap();
        assert!(!h.is_pluriclosed());
        // ∂∂̄ω = -(i/2) phi1∧phi2∧phibar1∧phibar2
        let n = 3;
        let expected = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phi(n, 2))
            .wedge(&BigradedForm::phibar(n, 1))
            .wedge(&BigradedForm::phibar(n, 2))
            .scale(&Scalar::from_ratio_i(-1, 2));
        assert_eq!(h.ddbar_omega, expected);
    }

    #[test]
    fn omega_is_real_and_oriented() {
        // ω = (i/2) Σ phi_k ∧ phibar_k is real, and ωⁿ/n! is the volume form
        // of e_1 ∧ … ∧ e_2n
        for spec in [
            CoalgebraSpec::torus(1, "t1"),
            CoalgebraSpec::kodaira_thurston(),
            CoalgebraSpec::iwasawa(),
        ] {
            let n = spec.n;
            let h = HermitianStructure::build(spec).unwrap();
            assert_eq!(h.omega.conj(), h.omega);
            assert!(h.omega.is_homogeneous(crate::exterior::Bidegree::new(1, 1)));
            let mut top = BigradedForm::one(n);
            for _ in 0..n {
                top = top.wedge(&h.omega);
            }
            let mut factorial = 1i64;
            for k in 2..=n as i64 {
                factorial *= k;
            }
            assert_eq!(
                top.scale(&Scalar::from_ratio(1, factorial)),
                crate::exterior::volume_form(n)
            );
        }
    }

    #[test]
    fn conjugation_symmetry_of_lambda() {
        // the block of λ̄ is the conjugate of λ under the conjugate basis map
        let h = HermitianStructure::build(kodaira_thurston()).unwrap();
        assert_eq!(h.op(OpName::Lam).conj_op(), *h.op(OpName::LamBar));
        assert_eq!(h.op(OpName::Tau).conj_op(), *h.op(OpName::TauBar));
    }

    #[test]
    fn injection_convention_failure() {
        let err =
            HermitianStructure::build_with(kodaira_thurston(), Some(Injection::ConventionFailure));
        assert!(matches!(err, Err(BuildError::HNotScalar { .. })));
    }

    #[test]
    fn injection_identity_failure_builds() {
        let h =
            HermitianStructure::build_with(kodaira_thurston(), Some(Injection::IdentityFailure))
                .unwrap();
        // tau no longer equals [Lambda, lambda]
        let lam = graded_commutator(h.op(OpName::Lambda), h.op(OpName::Lam));
        assert_ne!(lam, *h.op(OpName::Tau));
    }

    #[test]
    fn rescaled_spec_scales_coefficients() {
        let kt = kodaira_thurston();
        let r = kt.rescaled(&Scalar::from_int(2));
        let phi2 = BigradedForm::phi(2, 2);
        let h = HermitianStructure::build(r).unwrap();
        let expected = BigradedForm::phi(2, 1)
            .wedge(&BigradedForm::phibar(2, 1))
            .scale(&Scalar::from_ratio_i(1, 4));
        assert_eq!(h.op(OpName::DelBar).apply(&phi2), expected);
    }
}
