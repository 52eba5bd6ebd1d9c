//! Kernel tables of the combined Laplacian and everything computed from
//! them: dualities, the Lefschetz structure, primitive decompositions, Betti
//! and Hodge numbers, lambda cohomology, and the pluri-closed, holomorphic
//! and injectivity checks.
//!
//! Kernel membership is always an exact residual-equals-zero test; there are
//! no thresholds anywhere.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::calculus::{box_operator, laplacian};
use crate::exterior::{block_dim, Bidegree, BigradedForm};
use crate::linalg::{KernelBasis, Mat};
use crate::model::{CoalgebraSpec, HermitianStructure, OpName};
use crate::operator::GradedOperator;
use crate::scalar::Scalar;

/// Per-(p,q) dimension counts. Stored as `dims[p][q]`; printed and
/// serialized in the diamond layout with one column per p (ascending) and
/// one row per q (descending), matching the conventional way these tables
/// are drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub n: usize,
    dims: Vec<Vec<usize>>,
}

impl DimensionTable {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let dims = (0..=n)
            .map(|p| (0..=n).map(|q| f(p, q)).collect())
            .collect();
        let t = DimensionTable { n, dims };
        debug_assert!((0..=n).all(|p| (0..=n).all(|q| t.dim(p, q) <= block_dim(n, p, q))));
        t
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.dims[p][q]
    }

    /// Rows are q = n down to 0, columns are p = 0 up to n.
    pub fn printed(&self) -> Vec<Vec<usize>> {
        (0..=self.n)
            .map(|i| (0..=self.n).map(|p| self.dims[p][self.n - i]).collect())
            .collect()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().flatten().sum()
    }
}

impl Serialize for DimensionTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.printed().serialize(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiReport {
    pub b: Vec<usize>,
    /// b^k = b^{2n-k}; true for unimodular (in particular nilpotent) input.
    pub poincare_symmetric: bool,
}

/// Invariant Betti numbers by rank-nullity of the full differential on each
/// total degree. For nilmanifolds these equal the manifold Betti numbers.
pub fn betti_numbers(spec: &CoalgebraSpec) -> BettiReport {
    let h = d_total_matrices(spec);
    let n2 = 2 * spec.n;
    let mut b = Vec::with_capacity(n2 + 1);
    for k in 0..=n2 {
        let dim = degree_dim(spec.n, k);
        let rk = if k < n2 { h[k].rank() } else { 0 };
        let prev = if k > 0 { h[k - 1].rank() } else { 0 };
        b.push(dim - rk - prev);
    }
    let poincare = (0..=n2).all(|k| b[k] == b[n2 - k]);
    BettiReport {
        b,
        poincare_symmetric: poincare,
    }
}

fn degree_dim(n: usize, k: usize) -> usize {
    (0..=k.min(n))
        .map(|p| {
            let q = k - p;
            block_dim(n, p, q)
        })
        .sum()
}

/// Matrices of d on each total degree, blocks ordered by ascending p.
fn d_total_matrices(spec: &CoalgebraSpec) -> Vec<Mat> {
    let n = spec.n;
    let h = HermitianStructureParts::differentials(spec);
    let mut out = Vec::new();
    for k in 0..2 * n {
        let src: Vec<(usize, usize)> = bidegrees_of_degree(n, k);
        let dst: Vec<(usize, usize)> = bidegrees_of_degree(n, k + 1);
        let dst_offsets = offsets(n, &dst);
        let src_offsets = offsets(n, &src);
        let mut m = Mat::zeros(degree_dim(n, k + 1), degree_dim(n, k));
        for &(p, q) in &src {
            for (target, opmat) in [
                ((p + 1, q), h.del.block(p, q)),
                ((p, q + 1), h.delbar.block(p, q)),
            ] {
                let Some(opmat) = opmat else { continue };
                let Some(&ro) = dst_offsets.get(&target) else {
                    continue;
                };
                let co = src_offsets[&(p, q)];
                for r in 0..opmat.rows() {
                    for c in 0..opmat.cols() {
                        *m.at_mut(ro + r, co + c) = opmat.at(r, c).clone();
                    }
                }
            }
        }
        out.push(m);
    }
    out
}

fn bidegrees_of_degree(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..=k.min(n))
        .filter(|p| k - p <= n)
        .map(|p| (p, k - p))
        .collect()
}

fn offsets(n: usize, degs: &[(usize, usize)]) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    let mut acc = 0;
    for &(p, q) in degs {
        out.insert((p, q), acc);
        acc += block_dim(n, p, q);
    }
    out
}

/// Just ∂ and ∂̄, for the Betti computation on an unbuilt spec.
struct HermitianStructureParts {
    del: GradedOperator,
    delbar: GradedOperator,
}

impl HermitianStructureParts {
    fn differentials(spec: &CoalgebraSpec) -> Self {
        use crate::operator::Shift;
        let n = spec.n;
        let del = GradedOperator::from_map(n, Shift::new(1, 0), |m| {
            let d = m.bidegree();
            spec.d(&BigradedForm::monomial(n, *m, Scalar::one()))
                .component(Bidegree::new(d.p + 1, d.q))
        });
        let delbar = GradedOperator::from_map(n, Shift::new(0, 1), |m| {
            let d = m.bidegree();
            spec.d(&BigradedForm::monomial(n, *m, Scalar::one()))
                .component(Bidegree::new(d.p, d.q + 1))
        });
        HermitianStructureParts { del, delbar }
    }
}

/// Kernel dimensions and cached kernel bases of a shift-(0,0) operator,
/// block by block.
pub fn kernel_table(
    op: &GradedOperator,
) -> (DimensionTable, BTreeMap<(usize, usize), KernelBasis>) {
    assert_eq!(
        op.shift,
        crate::operator::Shift::new(0, 0),
        "kernel tables need shift (0,0)"
    );
    let n = op.n;
    let mut kernels = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            kernels.insert((p, q), op.block(p, q).unwrap().kernel_basis());
        }
    }
    let table = DimensionTable::from_fn(n, |p, q| kernels[&(p, q)].dim());
    (table, kernels)
}

/// Everything downstream needs the box kernels; compute them once.
pub struct Analysis<'a> {
    pub h: &'a HermitianStructure,
    pub box_op: GradedOperator,
    laps: BTreeMap<OpName, GradedOperator>,
    pub box_kernels: BTreeMap<(usize, usize), KernelBasis>,
    pub box_table: DimensionTable,
}

impl<'a> Analysis<'a> {
    pub fn new(h: &'a HermitianStructure) -> Self {
        let box_op = box_operator(h);
        let laps: BTreeMap<OpName, GradedOperator> = OpName::BOX_SUMMANDS
            .iter()
            .map(|name| (*name, laplacian(h, *name)))
            .collect();
        let (box_table, box_kernels) = kernel_table(&box_op);
        Analysis {
            h,
            box_op,
            laps,
            box_kernels,
            box_table,
        }
    }

    pub fn lap(&self, name: OpName) -> &GradedOperator {
        &self.laps[&name]
    }

    /// dim Ker Δ_∂̄ per block: the invariant Hodge numbers.
    pub fn hodge_table(&self) -> DimensionTable {
        let lap = self.lap(OpName::DelBar);
        DimensionTable::from_fn(self.h.n(), |p, q| {
            lap.block(p, q).unwrap().kernel_basis().dim()
        })
    }

    fn kernel_forms(&self, p: usize, q: usize) -> Vec<BigradedForm> {
        self.box_kernels[&(p, q)]
            .basis
            .iter()
            .map(|v| BigradedForm::from_coords(self.h.n(), Bidegree::new(p, q), v))
            .collect()
    }

    /// Conjugation, Hodge-star and Serre dualities of the box kernels, plus
    /// the star-adjoint identity δ* = -⋆ δ̄ ⋆ for all six first-order and
    /// zero-order operators.
    pub fn duality_check(&self) -> DualityReport {
        let n = self.h.n();
        let t = &self.box_table;
        let mut failures = Vec::new();

        let mut conj_dims = true;
        let mut serre_dims = true;
        for p in 0..=n {
            for q in 0..=n {
                if t.dim(p, q) != t.dim(q, p) {
                    conj_dims = false;
                    failures.push(format!("conjugation dims differ at ({p},{q})"));
                }
                if t.dim(p, q) != t.dim(n - p, n - q) {
                    serre_dims = false;
                    failures.push(format!("serre dims differ at ({p},{q})"));
                }
            }
        }

        let mut conj_mapped = true;
        let mut star_mapped = true;
        for p in 0..=n {
            for q in 0..=n {
                for f in self.kernel_forms(p, q) {
                    if !self.box_op.apply(&f.conj()).is_zero() {
                        conj_mapped = false;
                        failures.push(format!(
                            "conjugate of a kernel vector leaves Ker at ({p},{q})"
                        ));
                    }
                    if !self.box_op.apply(&f.hodge_star()).is_zero() {
                        star_mapped = false;
                        failures.push(format!("star of a kernel vector leaves Ker at ({p},{q})"));
                    }
                }
            }
        }

        let mut star_adjoint = Vec::new();
        for name in OpName::BOX_SUMMANDS {
            let ok = self.star_adjoint_identity(name);
            if !ok {
                failures.push(format!(
                    "delta* = ±star conj(delta) star fails for {}",
                    name.display()
                ));
            }
            star_adjoint.push(StarAdjointCheck {
                op: name.display().to_string(),
                holds: ok,
            });
        }

        let passed = conj_dims
            && serre_dims
            && conj_mapped
            && star_mapped
            && star_adjoint.iter().all(|c| c.holds);
        DualityReport {
            conj_dims_symmetric: conj_dims,
            conj_kernel_mapped: conj_mapped,
            hodge_kernel_mapped: star_mapped,
            serre_dims_symmetric: serre_dims,
            star_adjoint,
            failures,
            passed,
        }
    }

    /// The star route to the adjoint, blockwise with star blocks built
    /// independently of the Gram adjoint: δ* = -⋆ δ̄ ⋆ for the shift-degree-1
    /// operators ∂, ∂̄, τ, τ̄, and δ* = +⋆ δ̄ ⋆ for the degree-3 wedge
    /// operators λ, λ̄ (the adjoint of a wedge by a b-form picks up
    /// (-1)^{k(b+1)}, which is +1 for odd b).
    fn star_adjoint_identity(&self, name: OpName) -> bool {
        let n = self.h.n();
        let adjoint = self.h.adjoint(name);
        let conj = self.h.op(name.conj_partner());
        let flip = !matches!(name, OpName::Lam | OpName::LamBar);
        for p in 0..=n {
            for q in 0..=n {
                let lhs = adjoint.block(p, q);
                // chase x through star, conj operator, star
                let s1 = self.h.star_block(p, q);
                let (mp, mq) = (n - q, n - p);
                let rhs = match conj.block(mp, mq) {
                    Some(d) => {
                        let (ip, iq) = conj.shift.apply(mp, mq).unwrap();
                        let s2 = self.h.star_block(ip, iq);
                        let m = s2.mul(&d.mul(s1));
                        Some(if flip { m.neg() } else { m })
                    }
                    None => None,
                };
                match (lhs, rhs) {
                    (Some(l), Some(r)) => {
                        if *l != r {
                            return false;
                        }
                    }
                    (Some(l), None) => {
                        if !l.is_zero() {
                            return false;
                        }
                    }
                    (None, Some(r)) => {
                        if !r.is_zero() {
                            return false;
                        }
                    }
                    (None, None) => {}
                }
            }
        }
        true
    }

    /// The sl(2) structure on Ker(box): L and Λ preserve the kernel, and
    /// L^{n-k} restricted to kernels is an isomorphism for every p ≤ k ≤ n.
    pub fn lefschetz_check(&self) -> LefschetzReport {
        let n = self.h.n();
        let mut representation_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                for f in self.kernel_forms(p, q) {
                    for img in [
                        self.h.op(OpName::L).apply(&f),
                        self.h.op(OpName::Lambda).apply(&f),
                    ] {
                        if !self.box_op.apply(&img).is_zero() {
                            representation_ok = false;
                        }
                    }
                }
            }
        }

        let mut maps = Vec::new();
        let mut all_iso = true;
        for k in 0..=n {
            for p in 0..=k {
                let q = k - p;
                let power = n - k;
                let (tp, tq) = (p + n - k, n - p);
                let source_dim = self.box_table.dim(p, q);
                let target_dim = self.box_table.dim(tp, tq);
                // image of every source kernel basis vector under L^{n-k}
                let images: Vec<Vec<Scalar>> = self
                    .kernel_forms(p, q)
                    .iter()
                    .map(|f| {
                        let mut g = f.clone();
                        for _ in 0..power {
                            g = self.h.op(OpName::L).apply(&g);
                        }
                        g.coords(Bidegree::new(tp, tq))
                    })
                    .collect();
                let target_basis = &self.box_kernels[&(tp, tq)].basis;
                let restricted = express_in_basis(target_basis, &images, block_dim(n, tp, tq));
                let (rank, expressible) = match restricted {
                    Some(m) => (m.rank(), true),
                    None => (0, false),
                };
                let iso = expressible && source_dim == target_dim && rank == source_dim;
                if !iso {
                    all_iso = false;
                }
                maps.push(LefschetzMapReport {
                    p,
                    k,
                    power,
                    source: (p, q),
                    target: (tp, tq),
                    source_dim,
                    target_dim,
                    rank,
                    iso,
                });
            }
        }
        LefschetzReport {
            representation_ok,
            passed: representation_ok && all_iso,
            maps,
        }
    }

    /// dim(Ker box ∩ Ker Λ) per block, with the direct-sum reconstruction
    /// and the non-decreasing diagonal property.
    pub fn primitive_dims(&self) -> PrimitiveReport {
        let n = self.h.n();
        let lam = self.h.op(OpName::Lambda);
        let table = DimensionTable::from_fn(n, |p, q| {
            let b = self.box_op.block(p, q).unwrap();
            match lam.block(p, q) {
                Some(l) => Mat::vstack(&[b, l]).kernel_basis().dim(),
                None => b.kernel_basis().dim(),
            }
        });
        let mut failures = Vec::new();
        let mut reconstruction_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                if p + q > n {
                    continue;
                }
                let mut sum = 0;
                for j in 0..=p.min(q) {
                    sum += table.dim(p - j, q - j);
                }
                if sum != self.box_table.dim(p, q) {
                    reconstruction_ok = false;
                    failures.push(format!(
                        "primitive reconstruction fails at ({p},{q}): {} != {}",
                        sum,
                        self.box_table.dim(p, q)
                    ));
                }
            }
        }
        let mut monotonicity_ok = true;
        for p in 0..n {
            for q in 0..n {
                if p + q + 2 <= n && self.box_table.dim(p, q) > self.box_table.dim(p + 1, q + 1) {
                    monotonicity_ok = false;
                    failures.push(format!(
                        "kernel dims decrease from ({p},{q}) along the diagonal"
                    ));
                }
            }
        }
        PrimitiveReport {
            passed: reconstruction_ok && monotonicity_ok,
            table,
            reconstruction_ok,
            monotonicity_ok,
            failures,
        }
    }

    /// The two inequality families against the invariant Betti numbers and
    /// Hodge numbers, plus both directions of the Betti-vanishing corollary.
    pub fn inequality_report(&self) -> InequalityReport {
        let n = self.h.n();
        let betti = betti_numbers(&self.h.spec);
        let hodge = self.hodge_table();
        let mut failures = Vec::new();

        let mut degree_rows = Vec::new();
        let mut betti_bound_ok = true;
        for k in 0..=2 * n {
            let sum: usize = bidegrees_of_degree(n, k)
                .iter()
                .map(|&(p, q)| self.box_table.dim(p, q))
                .sum();
            let ok = sum <= betti.b[k];
            if !ok {
                betti_bound_ok = false;
                failures.push(format!("kernel sum {sum} exceeds b^{k} = {}", betti.b[k]));
            }
            degree_rows.push(DegreeBound {
                k,
                kernel_sum: sum,
                betti: betti.b[k],
                ok,
            });
        }

        let mut minmax_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                let bound = hodge.dim(p, q).min(hodge.dim(q, p));
                if self.box_table.dim(p, q) > bound {
                    minmax_ok = false;
                    failures.push(format!(
                        "dim Ker box at ({p},{q}) exceeds min(h^{{p,q}}, h^{{q,p}}) = {bound}"
                    ));
                }
            }
        }

        // b^k = 0 for k ≤ n forces vanishing along p+q ≡ k (mod 2), p+q ≤ k
        let mut vanishing_ok = true;
        for k in 0..=n {
            if betti.b[k] != 0 {
                continue;
            }
            for p in 0..=n {
                for q in 0..=n {
                    let s = p + q;
                    if s <= k && s % 2 == k % 2 && self.box_table.dim(p, q) != 0 {
                        vanishing_ok = false;
                        failures.push(format!("b^{k} = 0 but Ker box at ({p},{q}) is nonzero"));
                    }
                }
            }
        }

        // a nonzero kernel forces b^j > 0 for p+q ≤ j ≤ 2n-p-q, j ≡ p+q (2)
        let mut nonvanishing_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                if self.box_table.dim(p, q) == 0 {
                    continue;
                }
                let s = p + q;
                for j in (s..=2 * n - s).step_by(2) {
                    if betti.b[j] == 0 {
                        nonvanishing_ok = false;
                        failures.push(format!("Ker box at ({p},{q}) nonzero but b^{j} = 0"));
                    }
                }
            }
        }

        InequalityReport {
            passed: betti_bound_ok && minmax_ok && vanishing_ok && nonvanishing_ok,
            betti,
            degree_bounds: degree_rows,
            minmax_ok,
            vanishing_ok,
            nonvanishing_ok,
            failures,
        }
    }

    /// Kernel table of Δ_λ (or Δ_λ̄): the lambda-cohomology dimensions, with
    /// the fiberwise Hodge-decomposition rank identity, Serre duality of the
    /// table, and the inclusion Ker(box) ⊆ Ker Δ_λ.
    pub fn lambda_report(&self) -> LambdaReport {
        let n = self.h.n();
        let mut failures = Vec::new();
        let lam_table = DimensionTable::from_fn(n, |p, q| {
            self.lap(OpName::Lam)
                .block(p, q)
                .unwrap()
                .kernel_basis()
                .dim()
        });
        let lambar_table = DimensionTable::from_fn(n, |p, q| {
            self.lap(OpName::LamBar)
                .block(p, q)
                .unwrap()
                .kernel_basis()
                .dim()
        });

        let mut rank_identity_ok = true;
        for (name, table) in [(OpName::Lam, &lam_table), (OpName::LamBar, &lambar_table)] {
            let op = self.h.op(name);
            let (sp, sq) = (op.shift.dp as usize, op.shift.dq as usize);
            for p in 0..=n {
                for q in 0..=n {
                    let dim = block_dim(n, p, q);
                    let rank_in = if p >= sp && q >= sq {
                        op.block(p - sp, q - sq).map_or(0, Mat::rank)
                    } else {
                        0
                    };
                    let rank_out = op.block(p, q).map_or(0, Mat::rank);
                    if dim != rank_in + table.dim(p, q) + rank_out {
                        rank_identity_ok = false;
                        failures.push(format!(
                            "fiberwise decomposition fails for {} at ({p},{q})",
                            name.display()
                        ));
                    }
                }
            }
        }

        let mut serre_ok = true;
        let mut conj_symmetry_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                if lam_table.dim(p, q) != lam_table.dim(n - p, n - q)
                    || lambar_table.dim(p, q) != lambar_table.dim(n - p, n - q)
                {
                    serre_ok = false;
                    failures.push(format!("lambda table serre duality fails at ({p},{q})"));
                }
                if lambar_table.dim(p, q) != lam_table.dim(q, p) {
                    conj_symmetry_ok = false;
                    failures.push(format!("lambda/lambdabar conjugation fails at ({p},{q})"));
                }
            }
        }

        let mut inclusion_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                if self.box_table.dim(p, q) > lam_table.dim(p, q)
                    || self.box_table.dim(p, q) > lambar_table.dim(p, q)
                {
                    inclusion_ok = false;
                }
                for f in self.kernel_forms(p, q) {
                    if !self.lap(OpName::Lam).apply(&f).is_zero()
                        || !self.lap(OpName::LamBar).apply(&f).is_zero()
                    {
                        inclusion_ok = false;
                        failures.push(format!(
                            "box kernel vector escapes Ker Delta_lambda at ({p},{q})"
                        ));
                    }
                }
            }
        }

        LambdaReport {
            passed: rank_identity_ok && serre_ok && conj_symmetry_ok && inclusion_ok,
            lambda_table: lam_table,
            lambdabar_table: lambar_table,
            rank_identity_ok,
            serre_ok,
            conj_symmetry_ok,
            inclusion_ok,
            failures,
        }
    }

    /// When ∂∂̄ω = 0 the box kernel coincides with the kernel of
    /// Δ_∂ + Δ_∂̄ + Δ_τ + Δ_τ̄; in general only the containment holds.
    pub fn pluriclosed_check(&self) -> PluriclosedReport {
        let n = self.h.n();
        let partial = self
            .lap(OpName::Del)
            .add(self.lap(OpName::DelBar))
            .add(self.lap(OpName::Tau))
            .add(self.lap(OpName::TauBar));
        let pluriclosed = self.h.is_pluriclosed();
        let mut failures = Vec::new();

        let mut containment_ok = true;
        for p in 0..=n {
            for q in 0..=n {
                for f in self.kernel_forms(p, q) {
                    if !partial.apply(&f).is_zero() {
                        containment_ok = false;
                        failures.push(format!("Ker box ⊄ Ker partial sum at ({p},{q})"));
                    }
                }
            }
        }

        let kernels_equal = if pluriclosed {
            let mut equal = true;
            for p in 0..=n {
                for q in 0..=n {
                    let pk = partial.block(p, q).unwrap().kernel_basis();
                    if pk.dim() != self.box_table.dim(p, q) {
                        equal = false;
                        failures.push(format!("kernel dims differ at ({p},{q})"));
                        continue;
                    }
                    for v in &pk.basis {
                        let f = BigradedForm::from_coords(n, Bidegree::new(p, q), v);
                        if !self.box_op.apply(&f).is_zero() {
                            equal = false;
                            failures.push(format!(
                                "partial kernel vector escapes Ker box at ({p},{q})"
                            ));
                        }
                    }
                }
            }
            Some(equal)
        } else {
            None
        };

        PluriclosedReport {
            passed: containment_ok && kernels_equal.unwrap_or(true),
            pluriclosed,
            kernels_equal,
            containment_ok,
            failures,
        }
    }

    /// The space {η ∈ A^{p,0} : ∂̄η = 0, Δ_∂ η = 0, dω ∧ η = 0} for each p;
    /// every solution must land in Ker box^{p,0}.
    pub fn holomorphic_check(&self) -> HolomorphicReport {
        let n = self.h.n();
        let mut entries = Vec::new();
        let mut passed = true;
        for p in 0..=n {
            let dim = block_dim(n, p, 0);
            let mut constraints: Vec<Mat> = Vec::new();
            if let Some(b) = self.h.op(OpName::DelBar).block(p, 0) {
                constraints.push(b.clone());
            }
            constraints.push(self.lap(OpName::Del).block(p, 0).unwrap().clone());
            for wedge_form in [&self.h.del_omega, &self.h.delbar_omega] {
                if wedge_form.is_zero() {
                    continue;
                }
                let w = GradedOperator::wedge_by(n, wedge_form);
                if let Some(b) = w.block(p, 0) {
                    constraints.push(b.clone());
                }
            }
            let stacked = Mat::vstack(&constraints.iter().collect::<Vec<_>>());
            let kernel = stacked.kernel_basis();
            debug_assert_eq!(kernel.ambient_dim, dim);
            let mut in_box_kernel = true;
            let mut witnesses = Vec::new();
            for v in &kernel.basis {
                let f = BigradedForm::from_coords(n, Bidegree::new(p, 0), v);
                witnesses.push(f.label());
                if !self.box_op.apply(&f).is_zero() {
                    in_box_kernel = false;
                    passed = false;
                }
            }
            entries.push(HolomorphicEntry {
                p,
                dim: kernel.dim(),
                witnesses,
                in_box_kernel,
            });
        }
        HolomorphicReport { entries, passed }
    }

    /// Injectivity of each zero-order operator (and adjoint) per bidegree;
    /// injectivity anywhere forces the box kernel there to vanish.
    pub fn injectivity_check(&self) -> InjectivityReport {
        let n = self.h.n();
        let zero_order = [OpName::Tau, OpName::TauBar, OpName::Lam, OpName::LamBar];
        let mut injective = Vec::new();
        let mut passed = true;
        for name in zero_order {
            for (op_label, op) in [
                (name.display().to_string(), self.h.op(name)),
                (format!("{}*", name.display()), self.h.adjoint(name)),
            ] {
                for p in 0..=n {
                    for q in 0..=n {
                        let dim = block_dim(n, p, q);
                        let rank = op.block(p, q).map_or(0, Mat::rank);
                        if rank == dim && dim > 0 {
                            let box_dim = self.box_table.dim(p, q);
                            if box_dim != 0 {
                                passed = false;
                            }
                            injective.push(InjectivityEntry {
                                op: op_label.clone(),
                                p,
                                q,
                                box_dim,
                            });
                        }
                    }
                }
            }
        }
        InjectivityReport { injective, passed }
    }
}

/// Coordinates of `vectors` in the subspace spanned by `basis`, as columns;
/// None when some vector falls outside the span.
fn express_in_basis(basis: &[Vec<Scalar>], vectors: &[Vec<Scalar>], ambient: usize) -> Option<Mat> {
    if vectors.is_empty() {
        return Some(Mat::zeros(basis.len(), 0));
    }
    let b = basis.len();
    let mut aug = Mat::zeros(ambient, b + vectors.len());
    for (j, col) in basis.iter().enumerate() {
        aug.set_col(j, col);
    }
    for (j, col) in vectors.iter().enumerate() {
        aug.set_col(b + j, col);
    }
    let pivots = aug.rref_in_place();
    if pivots.iter().any(|&c| c >= b) {
        return None; // a vector column became a pivot: not in the span
    }
    debug_assert_eq!(pivots.len(), b, "basis columns must be independent");
    let mut x = Mat::zeros(b, vectors.len());
    for (row, _) in pivots.iter().enumerate() {
        for j in 0..vectors.len() {
            *x.at_mut(row, j) = aug.at(row, b + j).clone();
        }
    }
    Some(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct StarAdjointCheck {
    pub op: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub conj_dims_symmetric: bool,
    pub conj_kernel_mapped: bool,
    pub hodge_kernel_mapped: bool,
    pub serre_dims_symmetric: bool,
    pub star_adjoint: Vec<StarAdjointCheck>,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzMapReport {
    pub p: usize,
    pub k: usize,
    pub power: usize,
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub iso: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzReport {
    pub representation_ok: bool,
    pub maps: Vec<LefschetzMapReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimitiveReport {
    pub table: DimensionTable,
    pub reconstruction_ok: bool,
    pub monotonicity_ok: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeBound {
    pub k: usize,
    pub kernel_sum: usize,
    pub betti: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    pub betti: BettiReport,
    pub degree_bounds: Vec<DegreeBound>,
    pub minmax_ok: bool,
    pub vanishing_ok: bool,
    pub nonvanishing_ok: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaReport {
    pub lambda_table: DimensionTable,
    pub lambdabar_table: DimensionTable,
    pub rank_identity_ok: bool,
    pub serre_ok: bool,
    pub conj_symmetry_ok: bool,
    pub inclusion_ok: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PluriclosedReport {
    pub pluriclosed: bool,
    pub kernels_equal: Option<bool>,
    pub containment_ok: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HolomorphicEntry {
    pub p: usize,
    pub dim: usize,
    pub witnesses: Vec<String>,
    pub in_box_kernel: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HolomorphicReport {
    pub entries: Vec<HolomorphicEntry>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityEntry {
    pub op: String,
    pub p: usize,
    pub q: usize,
    pub box_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityReport {
    /// Bidegrees where some zero-order operator or adjoint is injective.
    pub injective: Vec<InjectivityEntry>,
    pub passed: bool,
}
