//! The bigraded exterior algebra of a 2n-dimensional Hermitian vector space.
//!
//! Monomials are wedge products of the unitary (1,0)-coframe `phi_1..phi_n`
//! and its conjugate `phibar_1..phibar_n`, in canonical order: all phi factors
//! by ascending index, then all phibar factors by ascending index. The
//! underlying real orthonormal coframe is `e_1..e_2n` with
//! `phi_k = e_{2k-1} + i e_{2k}`; the form inner product makes the real
//! monomials orthonormal, so a complex monomial of bidegree (p,q) has squared
//! norm 2^{p+q}. The Hodge star is extended complex-linearly from the real
//! star for the volume form `e_1 ∧ … ∧ e_2n`.

use std::collections::BTreeMap;

use num_integer::binomial;
use serde::Serialize;

use crate::linalg::Mat;
use crate::scalar::Scalar;

/// A (p,q) bidegree, 0 ≤ p, q ≤ n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

impl Bidegree {
    pub fn new(p: usize, q: usize) -> Self {
        Bidegree { p, q }
    }

    pub fn total(&self) -> usize {
        self.p + self.q
    }
}

/// Dimension of the (p,q) block: C(n,p)·C(n,q), zero out of range.
pub fn block_dim(n: usize, p: usize, q: usize) -> usize {
    if p > n || q > n {
        return 0;
    }
    (binomial(n as u64, p as u64) * binomial(n as u64, q as u64)) as usize
}

/// A basis monomial: strictly increasing phi indices and phibar indices,
/// stored as bitmasks (bit k-1 = index k).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub holo: u32,
    pub anti: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { holo: 0, anti: 0 };

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(
            self.holo.count_ones() as usize,
            self.anti.count_ones() as usize,
        )
    }

    fn indices(mask: u32) -> impl Iterator<Item = u32> {
        (0..32).filter(move |b| mask & (1 << b) != 0)
    }

    /// 1-based phi indices in ascending order.
    pub fn holo_indices(&self) -> Vec<usize> {
        Self::indices(self.holo).map(|b| b as usize + 1).collect()
    }

    pub fn anti_indices(&self) -> Vec<usize> {
        Self::indices(self.anti).map(|b| b as usize + 1).collect()
    }

    /// Human-readable name like `phi1^phi2^phibar1`, or `1` for the empty
    /// monomial.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for k in self.holo_indices() {
            parts.push(format!("phi{k}"));
        }
        for k in self.anti_indices() {
            parts.push(format!("phibar{k}"));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("^")
        }
    }
}

/// Lexicographic comparison of equal-size index subsets: at the first index
/// where membership differs, the subset containing it is smaller.
fn lex_subset_cmp(a: u32, b: u32) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if a == b {
        return Ordering::Equal;
    }
    let diff = a ^ b;
    let first = diff.trailing_zeros();
    if a & (1 << first) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let da = self.bidegree();
        let db = other.bidegree();
        (da.p, da.q)
            .cmp(&(db.p, db.q))
            .then_with(|| lex_subset_cmp(self.holo, other.holo))
            .then_with(|| lex_subset_cmp(self.anti, other.anti))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All k-subsets of {0..n-1} as bitmasks, in lexicographic order of the
/// ascending index lists.
fn subsets(n: usize, k: usize) -> Vec<u32> {
    fn rec(out: &mut Vec<u32>, acc: u32, next: usize, n: usize, left: usize) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for b in next..=(n - left) {
            rec(out, acc | (1 << b), b + 1, n, left - 1);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(&mut out, 0, 0, n, k);
    }
    out
}

/// The ordered monomial basis of A^{p,q}. The order fixes the coordinate
/// convention for every operator block in the crate: lexicographic in the phi
/// subset, then in the phibar subset.
pub fn enumerate_basis(n: usize, deg: Bidegree) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(block_dim(n, deg.p, deg.q));
    for h in subsets(n, deg.p) {
        for a in subsets(n, deg.q) {
            out.push(Monomial { holo: h, anti: a });
        }
    }
    out
}

/// Diagonal Gram matrix of A^{p,q}: every monomial has squared norm 2^{p+q}.
pub fn gram(n: usize, deg: Bidegree) -> Mat {
    let d = block_dim(n, deg.p, deg.q);
    Mat::diag(vec![Scalar::two_pow(deg.total() as i64); d])
}

/// Pairs (x, y) with x in `a`, y in `b`, x > y; the transposition count when
/// b's factors are merged after a's.
fn inversions(a: u32, b: u32) -> u32 {
    let mut count = 0;
    for y in Monomial::indices(b) {
        count += (a >> (y + 1)).count_ones();
    }
    count
}

/// Wedge of two monomials with exact sign, or None when a factor repeats.
fn wedge_monomials(a: &Monomial, b: &Monomial) -> Option<(Monomial, i64)> {
    if a.holo & b.holo != 0 || a.anti & b.anti != 0 {
        return None;
    }
    let da = a.bidegree();
    let db = b.bidegree();
    // factor sequence: (holo_a, anti_a, holo_b, anti_b) -> canonical order;
    // holo_b moves past all of anti_a, plus merge inversions in each half
    let swaps =
        inversions(a.holo, b.holo) + (db.p as u32) * (da.q as u32) + inversions(a.anti, b.anti);
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    Some((
        Monomial {
            holo: a.holo | b.holo,
            anti: a.anti | b.anti,
        },
        sign,
    ))
}

/// A finitely supported sum of monomials with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct BigradedForm {
    pub n: usize,
    coeffs: BTreeMap<Monomial, Scalar>,
}

impl BigradedForm {
    pub fn zero(n: usize) -> Self {
        BigradedForm {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, m: Monomial, c: Scalar) -> Self {
        let mut f = BigradedForm::zero(n);
        f.add_term(m, c);
        f
    }

    pub fn one(n: usize) -> Self {
        BigradedForm::monomial(n, Monomial::ONE, Scalar::one())
    }

    /// The basis (1,0)-form phi_k, 1-based index.
    pub fn phi(n: usize, k: usize) -> Self {
        assert!(1 <= k && k <= n);
        BigradedForm::monomial(
            n,
            Monomial {
                holo: 1 << (k - 1),
                anti: 0,
            },
            Scalar::one(),
        )
    }

    /// The basis (0,1)-form phibar_k.
    pub fn phibar(n: usize, k: usize) -> Self {
        assert!(1 <= k && k <= n);
        BigradedForm::monomial(
            n,
            Monomial {
                holo: 0,
                anti: 1 << (k - 1),
            },
            Scalar::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.coeffs.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(m).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add(&self, rhs: &BigradedForm) -> BigradedForm {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &BigradedForm) -> BigradedForm {
        self.add(&rhs.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> BigradedForm {
        let mut out = BigradedForm::zero(self.n);
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.terms() {
            out.coeffs.insert(*m, c * s);
        }
        out
    }

    /// Exact exterior product; the sign counts the transpositions needed to
    /// sort the concatenated factors into canonical order.
    pub fn wedge(&self, rhs: &BigradedForm) -> BigradedForm {
        assert_eq!(self.n, rhs.n, "wedge of forms over different coframes");
        let mut out = BigradedForm::zero(self.n);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                if let Some((m, sign)) = wedge_monomials(ma, mb) {
                    out.add_term(m, &(ca * cb) * &Scalar::from_int(sign));
                }
            }
        }
        out
    }

    /// Complex conjugation: conj(phi_S ∧ phibar_T) = ± phi_T ∧ phibar_S with
    /// the sign (-1)^{|S||T|}, coefficients conjugated. Antilinear involution
    /// mapping A^{p,q} to A^{q,p}.
    pub fn conj(&self) -> BigradedForm {
        let mut out = BigradedForm::zero(self.n);
        for (m, c) in self.terms() {
            let d = m.bidegree();
            let sign = if (d.p * d.q) % 2 == 0 { 1 } else { -1 };
            out.add_term(
                Monomial {
                    holo: m.anti,
                    anti: m.holo,
                },
                &c.conj() * &Scalar::from_int(sign),
            );
        }
        out
    }

    /// The homogeneous (p,q) component.
    pub fn component(&self, deg: Bidegree) -> BigradedForm {
        let mut out = BigradedForm::zero(self.n);
        for (m, c) in self.terms() {
            if m.bidegree() == deg {
                out.coeffs.insert(*m, c.clone());
            }
        }
        out
    }

    /// Bidegrees carrying a nonzero component, ascending.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut degs: Vec<Bidegree> = self.coeffs.keys().map(Monomial::bidegree).collect();
        degs.sort();
        degs.dedup();
        degs
    }

    pub fn is_homogeneous(&self, deg: Bidegree) -> bool {
        self.coeffs.keys().all(|m| m.bidegree() == deg)
    }

    /// Coordinates of the (p,q) component with respect to `enumerate_basis`.
    pub fn coords(&self, deg: Bidegree) -> Vec<Scalar> {
        enumerate_basis(self.n, deg)
            .iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    pub fn from_coords(n: usize, deg: Bidegree, coords: &[Scalar]) -> BigradedForm {
        let basis = enumerate_basis(n, deg);
        assert_eq!(coords.len(), basis.len());
        let mut out = BigradedForm::zero(n);
        for (m, c) in basis.into_iter().zip(coords) {
            out.add_term(m, c.clone());
        }
        out
    }

    /// Hermitian inner product with the 2^{p+q} monomial normalization,
    /// conjugate-linear in the second argument.
    pub fn inner(&self, rhs: &BigradedForm) -> Scalar {
        assert_eq!(self.n, rhs.n);
        let mut acc = Scalar::zero();
        for (m, c) in self.terms() {
            let other = rhs.coeff(m);
            if other.is_zero() {
                continue;
            }
            let w = Scalar::two_pow(m.bidegree().total() as i64);
            acc = &acc + &(&(c * &other.conj()) * &w);
        }
        acc
    }

    /// Complex-linear Hodge star for the invariant metric, computed through
    /// the real orthonormal coframe: expand phi_k = e_{2k-1} + i e_{2k},
    /// apply the real star of the volume form e_1 ∧ … ∧ e_2n, convert back.
    /// Maps A^{p,q} to A^{n-q,n-p} with ⋆⋆ = (-1)^{p+q}.
    pub fn hodge_star(&self) -> BigradedForm {
        let n = self.n;
        let full: u64 = if n == 0 { 0 } else { (1u64 << (2 * n)) - 1 };
        let mut real_terms: BTreeMap<u64, Scalar> = BTreeMap::new();
        for (m, c) in self.terms() {
            for (mask, coeff) in to_real(n, m) {
                let starred = mask ^ full;
                let sign = real_inversions(mask, starred);
                let s = if sign % 2 == 0 { coeff } else { -&coeff };
                let entry = real_terms.entry(starred).or_insert_with(Scalar::zero);
                *entry = &*entry + &(&s * c);
            }
        }
        let mut out = BigradedForm::zero(n);
        for (mask, c) in real_terms {
            if c.is_zero() {
                continue;
            }
            for (m, coeff) in from_real(n, mask) {
                out.add_term(m, &coeff * &c);
            }
        }
        out
    }

    pub fn label(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| format!("({}) {}", c, m.label()))
            .collect();
        parts.join(" + ")
    }
}

impl std::fmt::Debug for BigradedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The volume form e_1 ∧ … ∧ e_2n expressed in the complex monomial basis.
pub fn volume_form(n: usize) -> BigradedForm {
    let full: u64 = if n == 0 { 0 } else { (1u64 << (2 * n)) - 1 };
    let mut out = BigradedForm::zero(n);
    for (m, c) in from_real(n, full) {
        out.add_term(m, c);
    }
    out
}

/// Transpositions needed to merge the ascending factor lists of `a` then `b`:
/// pairs (x in a, y in b) with x > y.
fn real_inversions(a: u64, b: u64) -> u32 {
    let mut count = 0;
    let mut bb = b;
    while bb != 0 {
        let y = bb.trailing_zeros();
        count += (a >> (y + 1)).count_ones();
        bb &= bb - 1;
    }
    count
}

/// Expand a complex monomial into real e-basis terms. Real indices are
/// 0-based: 2(k-1) is e_{2k-1} and 2(k-1)+1 is e_{2k}.
fn to_real(n: usize, m: &Monomial) -> Vec<(u64, Scalar)> {
    let _ = n;
    let mut acc: Vec<(u64, Scalar)> = vec![(0, Scalar::one())];
    let push_factor = |acc: &mut Vec<(u64, Scalar)>, k: usize, conjugated: bool| {
        let re_idx = 2 * (k - 1) as u32;
        let im_idx = re_idx + 1;
        let i_coeff = if conjugated {
            -Scalar::i()
        } else {
            Scalar::i()
        };
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (mask, c) in acc.iter() {
            for (idx, extra) in [(re_idx, Scalar::one()), (im_idx, i_coeff.clone())] {
                if mask & (1 << idx) != 0 {
                    continue;
                }
                let swaps = (mask >> (idx + 1)).count_ones();
                let sign = if swaps % 2 == 0 { 1 } else { -1 };
                next.push((mask | (1 << idx), &(c * &extra) * &Scalar::from_int(sign)));
            }
        }
        *acc = next;
    };
    for k in m.holo_indices() {
        push_factor(&mut acc, k, false);
    }
    for k in m.anti_indices() {
        push_factor(&mut acc, k, true);
    }
    acc
}

/// Expand a real e-monomial into complex monomial terms:
/// e_{2k-1} = (phi_k + phibar_k)/2 and e_{2k} = (i/2)(phibar_k - phi_k).
fn from_real(n: usize, mask: u64) -> Vec<(Monomial, Scalar)> {
    let _ = n;
    let half = Scalar::from_ratio(1, 2);
    let i_half = Scalar::from_ratio_i(1, 2);
    let mut acc: Vec<(Monomial, Scalar)> = vec![(Monomial::ONE, Scalar::one())];
    let mut mm = mask;
    while mm != 0 {
        let idx = mm.trailing_zeros();
        mm &= mm - 1;
        let k_bit = 1u32 << (idx / 2);
        // choices: (is_anti, coefficient)
        let choices: [(bool, Scalar); 2] = if idx % 2 == 0 {
            [(false, half.clone()), (true, half.clone())]
        } else {
            [(false, -&i_half), (true, i_half.clone())]
        };
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (mono, c) in acc.iter() {
            for (is_anti, extra) in choices.iter() {
                let (holo, anti) = if *is_anti {
                    if mono.anti & k_bit != 0 {
                        continue;
                    }
                    (mono.holo, mono.anti | k_bit)
                } else {
                    if mono.holo & k_bit != 0 {
                        continue;
                    }
                    (mono.holo | k_bit, mono.anti)
                };
                // sign of moving the appended factor into canonical position
                let swaps = if *is_anti {
                    inversions(mono.anti, k_bit)
                } else {
                    inversions(mono.holo, k_bit) + mono.anti.count_ones()
                };
                let sign = if swaps % 2 == 0 { 1 } else { -1 };
                next.push((
                    Monomial { holo, anti },
                    &(c * extra) * &Scalar::from_int(sign),
                ));
            }
        }
        acc = next;
    }
    // merge duplicates
    let mut merged: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (m, c) in acc {
        let e = merged.entry(m).or_insert_with(Scalar::zero);
        *e = &*e + &c;
    }
    merged.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_enumeration() {
        assert_eq!(enumerate_basis(2, Bidegree::new(0, 0)), vec![Monomial::ONE]);
        let b11 = enumerate_basis(2, Bidegree::new(1, 1));
        assert_eq!(b11.len(), 4);
        let labels: Vec<String> = b11.iter().map(Monomial::label).collect();
        assert_eq!(
            labels,
            vec![
                "phi1^phibar1",
                "phi1^phibar2",
                "phi2^phibar1",
                "phi2^phibar2"
            ]
        );
        assert_eq!(enumerate_basis(3, Bidegree::new(2, 1)).len(), 9);
    }

    #[test]
    fn wedge_signs() {
        let n = 2;
        let p1 = BigradedForm::phi(n, 1);
        let pb1 = BigradedForm::phibar(n, 1);
        assert!(p1.wedge(&p1).is_zero());
        let a = p1.wedge(&pb1);
        assert_eq!(a.coeff(&Monomial { holo: 1, anti: 1 }), Scalar::one());
        let b = pb1.wedge(&p1);
        assert_eq!(b, a.scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn wedge_graded_commutativity() {
        // a ∧ b = (-1)^{|a||b|} b ∧ a on monomials of several degrees
        let n = 3;
        let forms = [
            BigradedForm::phi(n, 1),
            BigradedForm::phibar(n, 2),
            BigradedForm::phi(n, 2).wedge(&BigradedForm::phibar(n, 3)),
            BigradedForm::phi(n, 1)
                .wedge(&BigradedForm::phi(n, 3))
                .wedge(&BigradedForm::phibar(n, 1)),
        ];
        let degree = |f: &BigradedForm| {
            let d = f.bidegrees()[0];
            d.total()
        };
        for a in &forms {
            for b in &forms {
                let ab = a.wedge(b);
                let ba = b.wedge(a);
                let sign = if (degree(a) * degree(b)) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(ab, ba.scale(&Scalar::from_int(sign)));
            }
        }
    }

    #[test]
    fn wedge_associativity() {
        let n = 3;
        let a = BigradedForm::phi(n, 1).add(&BigradedForm::phibar(n, 2));
        let b = BigradedForm::phi(n, 2).add(&BigradedForm::phibar(n, 1).scale(&Scalar::i()));
        let c = BigradedForm::phi(n, 3).add(&BigradedForm::phibar(n, 3));
        assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn gram_values() {
        assert_eq!(gram(2, Bidegree::new(0, 0)), Mat::identity(1));
        let g10 = gram(2, Bidegree::new(1, 0));
        assert_eq!(g10, Mat::diag(vec![Scalar::from_int(2); 2]));
        let g11 = gram(2, Bidegree::new(1, 1));
        assert_eq!(g11, Mat::diag(vec![Scalar::from_int(4); 4]));
    }

    #[test]
    fn star_scalar_and_volume() {
        for n in 1..=3 {
            let one = BigradedForm::one(n);
            assert_eq!(one.hodge_star(), volume_form(n));
            assert_eq!(volume_form(n).hodge_star(), one);
        }
    }

    #[test]
    fn star_n1_phi() {
        // expand phi1 = e1 + i e2, star is e2 - i e1 = -i phi1
        let f = BigradedForm::phi(1, 1);
        assert_eq!(f.hodge_star(), f.scale(&-Scalar::i()));
    }

    #[test]
    fn star_bidegree_and_involution() {
        for n in 1..=4usize {
            for p in 0..=n {
                for q in 0..=n {
                    for m in enumerate_basis(n, Bidegree::new(p, q)) {
                        let f = BigradedForm::monomial(n, m, Scalar::one());
                        let sf = f.hodge_star();
                        assert!(
                            sf.is_homogeneous(Bidegree::new(n - q, n - p)),
                            "star bidegree"
                        );
                        let ssf = sf.hodge_star();
                        let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                        assert_eq!(
                            ssf,
                            f.scale(&Scalar::from_int(sign)),
                            "star not involutive at ({p},{q}) n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn star_isometry() {
        // ⟨⋆a, ⋆b⟩ = ⟨a, b⟩ on a spread of homogeneous forms
        let n = 2;
        let deg = Bidegree::new(1, 1);
        let basis = enumerate_basis(n, deg);
        let a = BigradedForm::monomial(n, basis[0], Scalar::i()).add(&BigradedForm::monomial(
            n,
            basis[2],
            Scalar::from_ratio(1, 2),
        ));
        let b = BigradedForm::monomial(n, basis[0], Scalar::from_int(3))
            .add(&BigradedForm::monomial(n, basis[3], Scalar::i()));
        assert_eq!(a.hodge_star().inner(&b.hodge_star()), a.inner(&b));
    }

    #[test]
    fn conj_is_antilinear_involution() {
        let n = 2;
        let f = BigradedForm::phi(n, 1)
            .wedge(&BigradedForm::phibar(n, 2))
            .scale(&Scalar::i());
        assert_eq!(f.conj().conj(), f);
        let g = f.scale(&Scalar::from_ratio(2, 3));
        assert_eq!(g.conj(), f.conj().scale(&Scalar::from_ratio(2, 3)));
        // conj maps (1,1)... to (1,1), and swaps the off-diagonal degrees
        assert!(f.is_homogeneous(Bidegree::new(1, 1)));
        assert!(f.conj().is_homogeneous(Bidegree::new(1, 1)));
        let h = BigradedForm::phi(n, 1).wedge(&BigradedForm::phi(n, 2));
        assert!(h.conj().is_homogeneous(Bidegree::new(0, 2)));
    }

    #[test]
    fn inner_product_norms() {
        let n = 2;
        assert_eq!(
            BigradedForm::one(n).inner(&BigradedForm::one(n)),
            Scalar::one()
        );
        let p1 = BigradedForm::phi(n, 1);
        assert_eq!(p1.inner(&p1), Scalar::from_int(2));
        let m = BigradedForm::phi(n, 1).wedge(&BigradedForm::phibar(n, 1));
        assert_eq!(m.inner(&m), Scalar::from_int(4));
        // distinct monomials are orthogonal
        assert_eq!(p1.inner(&BigradedForm::phi(n, 2)), Scalar::zero());
    }
}
