//! Even integral lattices: construction, invariants, sublattices, and the
//! explicit orthogonal transformations attached to isotropic vectors and
//! isotropic planes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat::{dot_int, IMat, IVec};

/// An integral lattice presented by its Gram matrix in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    pub gram: IMat,
    pub label: Option<String>,
}

/// Inertia of a rational symmetric form: positive, negative and null counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.positive + self.negative + self.null
    }
}

/// Integer matrix mapping source basis coordinates to target basis
/// coordinates (columns are images of the source basis vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    pub matrix: IMat,
    pub source: IntLattice,
    pub target: IntLattice,
}

impl LatticeMap {
    pub fn apply(&self, v: &[BigInt]) -> IVec {
        self.matrix.mul_vec(v)
    }

    /// Exact check of `matrix^T * gram_target * matrix = gram_source`.
    pub fn is_isometry(&self) -> bool {
        if self.matrix.rows != self.target.rank() || self.matrix.cols != self.source.rank() {
            return false;
        }
        let mt = self.matrix.transpose();
        mt.mul(&self.target.gram).mul(&self.matrix) == self.source.gram
    }
}

/// Elementary divisors (> 1) of a nondegenerate Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub divisors: Vec<BigInt>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.divisors.iter().product()
    }
}

/// The standard lattices known to `make_standard`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardLattice {
    /// Hyperbolic plane, Gram [[0,1],[1,0]].
    U,
    /// Rank-one lattice with the given self-product.
    I(BigInt),
    A(usize),
    D(usize),
    E(usize),
    /// Out of scope; always an error.
    Leech,
}

impl IntLattice {
    pub fn new(gram: IMat, label: Option<String>) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(IntLattice { gram, label })
    }

    pub fn rank(&self) -> usize {
        self.gram.rows
    }

    /// True when every diagonal entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn direct_sum(&self, other: &IntLattice) -> IntLattice {
        IntLattice { gram: self.gram.block_diag(&other.gram), label: None }
    }

    pub fn rescale(&self, n: &BigInt) -> Result<IntLattice> {
        if n.is_zero() {
            return Err(Error::Precondition("rescale by zero".into()));
        }
        Ok(IntLattice { gram: self.gram.scale(n), label: None })
    }

    pub fn signature(&self) -> Signature {
        let (positive, negative, null) =
            crate::mat::symmetric_signature(&self.gram.to_rational());
        Signature { positive, negative, null }
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.det()
    }

    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if self.determinant().is_zero() {
            return Err(Error::DegenerateGram);
        }
        let snf = self.gram.snf();
        let divisors =
            snf.diag.into_iter().filter(|d| d > &BigInt::one()).collect();
        Ok(DiscriminantGroup { divisors })
    }

    pub fn inner(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        let n = self.rank();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "inner product on rank-{} lattice got vectors of length {} and {}",
                n,
                x.len(),
                y.len()
            )));
        }
        Ok(dot_int(x, &self.gram.mul_vec(y)))
    }

    pub fn norm(&self, x: &[BigInt]) -> Result<BigInt> {
        self.inner(x, x)
    }

    /// Integer basis of `{x in L : x ⊥ s for all s in S}`, computed as the
    /// saturated kernel of the pairing matrix. The result is a primitive
    /// sublattice.
    pub fn orthogonal_complement(&self, s: &[IVec]) -> Result<Vec<IVec>> {
        let n = self.rank();
        for v in s {
            if v.len() != n {
                return Err(Error::DimensionMismatch("complement generator length".into()));
            }
        }
        let pairing = IMat::from_rows(
            s.iter().map(|v| self.gram.mul_vec(v)).collect::<Vec<_>>(),
        );
        if s.is_empty() {
            return Ok(IMat::identity(n).to_rows());
        }
        Ok(pairing.int_kernel())
    }

    /// Basis of the primitive hull `(Q-span of S) ∩ L`.
    pub fn saturate(&self, s: &[IVec]) -> Result<Vec<IVec>> {
        let n = self.rank();
        for v in s {
            if v.len() != n {
                return Err(Error::DimensionMismatch("saturate generator length".into()));
            }
        }
        if s.is_empty() {
            return Ok(Vec::new());
        }
        let m = IMat::from_rows(s.to_vec());
        let k1 = m.int_kernel();
        if k1.is_empty() {
            return Ok(IMat::identity(n).to_rows());
        }
        Ok(IMat::from_rows(k1).int_kernel())
    }

    pub fn is_primitive(&self, v: &[BigInt]) -> Result<bool> {
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::Precondition("zero vector".into()));
        }
        let mut g = BigInt::zero();
        for x in v {
            g = g.gcd(x);
        }
        Ok(g.is_one())
    }

    /// Gram matrix of the sublattice spanned by the given vectors.
    pub fn sublattice_gram(&self, basis: &[IVec]) -> Result<IMat> {
        let k = basis.len();
        let mut g = IMat::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                g[(i, j)] = self.inner(&basis[i], &basis[j])?;
            }
        }
        Ok(g)
    }

    /// The unipotent isometry `z ↦ z + φ(z,e)f − φ(z,f)e − ½φ(f,f)φ(z,e)e`
    /// attached to an isotropic `e` and `f ⊥ e` of even norm.
    pub fn eichler_transvection(&self, e: &[BigInt], f: &[BigInt]) -> Result<LatticeMap> {
        if !self.inner(e, e)?.is_zero() {
            return Err(Error::Precondition("e must be isotropic".into()));
        }
        if !self.inner(e, f)?.is_zero() {
            return Err(Error::Precondition("f must be orthogonal to e".into()));
        }
        let q = self.inner(f, f)?;
        if q.is_odd() {
            return Err(Error::Precondition("f must have even norm".into()));
        }
        let n = self.rank();
        let ge = self.gram.mul_vec(e);
        let gf = self.gram.mul_vec(f);
        let half_q = &q / BigInt::from(2);
        let mut t = IMat::identity(n);
        for i in 0..n {
            for j in 0..n {
                let add = &f[i] * &ge[j] - &e[i] * &gf[j] - &half_q * &e[i] * &ge[j];
                t[(i, j)] += add;
            }
        }
        let map = LatticeMap { matrix: t, source: self.clone(), target: self.clone() };
        debug_assert!(map.is_isometry());
        Ok(map)
    }

    /// The unipotent isometry `z ↦ z + φ(z,e)f − φ(z,f)e` attached to a
    /// totally isotropic pair `e, f`.
    pub fn plane_transvection(&self, e: &[BigInt], f: &[BigInt]) -> Result<LatticeMap> {
        if !self.inner(e, e)?.is_zero()
            || !self.inner(f, f)?.is_zero()
            || !self.inner(e, f)?.is_zero()
        {
            return Err(Error::Precondition(
                "e and f must span a totally isotropic sublattice".into(),
            ));
        }
        let n = self.rank();
        let ge = self.gram.mul_vec(e);
        let gf = self.gram.mul_vec(f);
        let mut t = IMat::identity(n);
        for i in 0..n {
            for j in 0..n {
                let add = &f[i] * &ge[j] - &e[i] * &gf[j];
                t[(i, j)] += add;
            }
        }
        let map = LatticeMap { matrix: t, source: self.clone(), target: self.clone() };
        debug_assert!(map.is_isometry());
        Ok(map)
    }
}

pub fn make_standard(kind: StandardLattice, sign: i64) -> Result<IntLattice> {
    if sign != 1 && sign != -1 {
        return Err(Error::Unsupported(format!("sign {} (must be 1 or -1)", sign)));
    }
    let (gram, name) = match kind {
        StandardLattice::U => {
            (crate::mat::imat_from_i64(&[&[0, 1], &[1, 0]]), "U".to_string())
        }
        StandardLattice::I(n) => {
            let name = format!("I({})", n);
            (IMat::from_rows(vec![vec![n]]), name)
        }
        StandardLattice::A(k) => {
            if k < 1 {
                return Err(Error::Unsupported("A(k) needs k >= 1".into()));
            }
            (chain_gram(k), format!("A{}", k))
        }
        StandardLattice::D(k) => {
            if k < 2 {
                return Err(Error::Unsupported("D(k) needs k >= 2".into()));
            }
            (d_gram(k), format!("D{}", k))
        }
        StandardLattice::E(k) => {
            let arms: [usize; 3] = match k {
                6 => [1, 2, 2],
                7 => [1, 2, 3],
                8 => [1, 2, 4],
                _ => return Err(Error::Unsupported("E(k) needs k in {6,7,8}".into())),
            };
            (t_shape_gram(arms, 2, -1), format!("E{}", k))
        }
        StandardLattice::Leech => {
            return Err(Error::Unsupported("Leech lattice is out of scope".into()))
        }
    };
    let label = if sign == -1 { format!("{}(-1)", name) } else { name };
    let gram = if sign == -1 { gram.scale(&BigInt::from(-1)) } else { gram };
    IntLattice::new(gram, Some(label))
}

/// A_k Cartan matrix: 2 on the diagonal, -1 on the chain.
fn chain_gram(k: usize) -> IMat {
    let mut g = IMat::zero(k, k);
    for i in 0..k {
        g[(i, i)] = BigInt::from(2);
        if i + 1 < k {
            g[(i, i + 1)] = BigInt::from(-1);
            g[(i + 1, i)] = BigInt::from(-1);
        }
    }
    g
}

/// D_k Cartan matrix with basis order (prong, prong, chain...): nodes 0 and 1
/// both attach to node 2.  D_2 = A1+A1 and D_3 = A3 under this convention.
fn d_gram(k: usize) -> IMat {
    let mut g = IMat::zero(k, k);
    for i in 0..k {
        g[(i, i)] = BigInt::from(2);
    }
    if k >= 3 {
        g[(0, 2)] = BigInt::from(-1);
        g[(2, 0)] = BigInt::from(-1);
        g[(1, 2)] = BigInt::from(-1);
        g[(2, 1)] = BigInt::from(-1);
        for i in 2..k - 1 {
            g[(i, i + 1)] = BigInt::from(-1);
            g[(i + 1, i)] = BigInt::from(-1);
        }
    }
    g
}

/// Gram matrix of a T-shaped graph: basis order is (center, arm1 outward,
/// arm2 outward, arm3 outward); `diag` on nodes, `adj` on edges.
pub fn t_shape_gram(arms: [usize; 3], diag: i64, adj: i64) -> IMat {
    let n = 1 + arms[0] + arms[1] + arms[2];
    let mut g = IMat::zero(n, n);
    for i in 0..n {
        g[(i, i)] = BigInt::from(diag);
    }
    let mut idx = 1usize;
    for &len in &arms {
        let mut prev = 0usize; // center
        for _ in 0..len {
            g[(prev, idx)] = BigInt::from(adj);
            g[(idx, prev)] = BigInt::from(adj);
            prev = idx;
            idx += 1;
        }
    }
    g
}

/// Complete a saturated sublattice basis (rows) to a basis of the ambient
/// `Z^n`; returns the complementary vectors.
pub fn complement_of_saturated(rows: &[IVec], n: usize) -> Vec<IVec> {
    if rows.is_empty() {
        return IMat::identity(n).to_rows();
    }
    let m = IMat::from_rows(rows.to_vec());
    let snf = m.snf();
    let rank = snf.diag.iter().filter(|d| !d.is_zero()).count();
    debug_assert!(snf.diag.iter().take(rank).all(|d| d.is_one()), "input not saturated");
    (rank..n).map(|i| snf.w_inv.row(i).to_vec()).collect()
}

/// Bounded exhaustive search for an isometry `L1 -> L2`; `None` means "no
/// witness with entries in [-bound, bound]", not a disproof.
pub fn small_rank_isometric(
    l1: &IntLattice,
    l2: &IntLattice,
    coeff_bound: i64,
) -> Result<Option<LatticeMap>> {
    let n = l1.rank();
    if n != l2.rank() {
        return Ok(None);
    }
    if n > 4 {
        return Err(Error::Unsupported(
            "exhaustive isometry search is guarded to rank <= 4".into(),
        ));
    }
    if l1.determinant() != l2.determinant() || l1.signature() != l2.signature() {
        return Ok(None);
    }
    // cheap happy path: equal Grams are isometric via the identity
    if l1.gram == l2.gram {
        return Ok(Some(LatticeMap {
            matrix: IMat::identity(n),
            source: l1.clone(),
            target: l2.clone(),
        }));
    }
    let mut cols: Vec<IVec> = Vec::with_capacity(n);
    if search_columns(l1, l2, coeff_bound, &mut cols) {
        let mut m = IMat::zero(n, n);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = c[i].clone();
            }
        }
        let map = LatticeMap { matrix: m, source: l1.clone(), target: l2.clone() };
        debug_assert!(map.is_isometry());
        return Ok(Some(map));
    }
    Ok(None)
}

fn search_columns(l1: &IntLattice, l2: &IntLattice, bound: i64, cols: &mut Vec<IVec>) -> bool {
    let n = l1.rank();
    let j = cols.len();
    if j == n {
        return true;
    }
    let mut candidate = vec![-bound; n];
    loop {
        let col: IVec = candidate.iter().map(|&x| BigInt::from(x)).collect();
        let ok = {
            let norm = l2.inner(&col, &col).unwrap();
            norm == l1.gram[(j, j)]
                && (0..j).all(|i| l2.inner(&cols[i], &col).unwrap() == l1.gram[(i, j)])
        };
        if ok {
            cols.push(col);
            if search_columns(l1, l2, bound, cols) {
                return true;
            }
            cols.pop();
        }
        // next candidate in the box, lexicographically
        let mut k = 0usize;
        loop {
            if k == n {
                return false;
            }
            candidate[k] += 1;
            if candidate[k] <= bound {
                break;
            }
            candidate[k] = -bound;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{imat_from_i64, ivec_from_i64};
    use num_traits::Signed;

    pub fn u() -> IntLattice {
        make_standard(StandardLattice::U, 1).unwrap()
    }

    fn e8_minus() -> IntLattice {
        make_standard(StandardLattice::E(8), -1).unwrap()
    }

    #[test]
    fn standard_u_and_rank_one() {
        assert_eq!(u().gram, imat_from_i64(&[&[0, 1], &[1, 0]]));
        let g4 = make_standard(StandardLattice::I(BigInt::from(2 - 2 * 4)), 1).unwrap();
        assert_eq!(g4.gram, imat_from_i64(&[&[-6]]));
        assert!(make_standard(StandardLattice::E(5), 1).is_err());
        assert!(make_standard(StandardLattice::Leech, 1).is_err());
    }

    #[test]
    fn e8_is_even_unimodular_negative_definite() {
        let l = e8_minus();
        assert_eq!(l.rank(), 8);
        assert!(l.is_even());
        assert_eq!(l.determinant(), BigInt::one());
        let sig = l.signature();
        assert_eq!((sig.positive, sig.negative, sig.null), (0, 8, 0));
    }

    #[test]
    fn direct_sum_examples() {
        let uu = u().direct_sum(&u());
        assert_eq!(uu.rank(), 4);
        assert_eq!(uu.gram[(2, 3)], BigInt::one());
        let zero = IntLattice::new(IMat::zero(0, 0), None).unwrap();
        assert_eq!(u().direct_sum(&zero).gram, u().gram);
        assert_eq!(zero.determinant(), BigInt::one());
    }

    #[test]
    fn rescale_examples() {
        let u2 = u().rescale(&BigInt::from(2)).unwrap();
        assert_eq!(u2.gram, imat_from_i64(&[&[0, 2], &[2, 0]]));
        let e8m = make_standard(StandardLattice::E(8), 1)
            .unwrap()
            .rescale(&BigInt::from(-1))
            .unwrap();
        assert_eq!(e8m.gram, e8_minus().gram);
        assert_eq!(u().rescale(&BigInt::one()).unwrap().gram, u().gram);
        assert!(u().rescale(&BigInt::zero()).is_err());
    }

    #[test]
    fn signature_and_determinant() {
        let sig = u().signature();
        assert_eq!((sig.positive, sig.negative, sig.null), (1, 1, 0));
        assert_eq!(u().determinant(), BigInt::from(-1));
        assert_eq!(sig.rank(), 2);
    }

    #[test]
    fn discriminant_groups() {
        assert!(u().discriminant_group().unwrap().divisors.is_empty());
        let i6 = make_standard(StandardLattice::I(BigInt::from(-6)), 1).unwrap();
        assert_eq!(i6.discriminant_group().unwrap().divisors, vec![BigInt::from(6)]);
        // span of h_3 and a digonal vector inside the K3 lattice
        let span = IntLattice::new(imat_from_i64(&[&[4, 2], &[2, 0]]), None).unwrap();
        assert_eq!(
            span.discriminant_group().unwrap().divisors,
            vec![BigInt::from(2), BigInt::from(2)]
        );
        let degenerate = IntLattice::new(imat_from_i64(&[&[0]]), None).unwrap();
        assert!(degenerate.discriminant_group().is_err());
    }

    #[test]
    fn inner_products() {
        let e = ivec_from_i64(&[1, 0]);
        let f = ivec_from_i64(&[0, 1]);
        assert_eq!(u().inner(&e, &f).unwrap(), BigInt::one());
        assert!(u().inner(&e, &ivec_from_i64(&[1])).is_err());
    }

    #[test]
    fn complement_of_isotropic_vector_in_u() {
        let e = ivec_from_i64(&[1, 0]);
        let basis = u().orthogonal_complement(&[e.clone()]).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(crate::mat::canonical_sign(&basis[0]), e);
        let full = u().orthogonal_complement(&[]).unwrap();
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn saturation_examples() {
        let sat = u().saturate(&[ivec_from_i64(&[2, 0])]).unwrap();
        assert_eq!(sat.len(), 1);
        assert_eq!(crate::mat::canonical_sign(&sat[0]), ivec_from_i64(&[1, 0]));
        // a primitive basis saturates to itself (same HNF)
        let basis = vec![ivec_from_i64(&[1, 1]), ivec_from_i64(&[0, 1])];
        let sat = u().saturate(&basis).unwrap();
        let h1 = IMat::from_rows(basis).row_hnf().0;
        let h2 = IMat::from_rows(sat).row_hnf().0;
        assert_eq!(h1, h2);
    }

    #[test]
    fn primitivity() {
        assert!(u().is_primitive(&ivec_from_i64(&[1, 1])).unwrap());
        assert!(!u().is_primitive(&ivec_from_i64(&[0, 2])).unwrap());
        assert!(u().is_primitive(&ivec_from_i64(&[0, 0])).is_err());
    }

    #[test]
    fn eichler_transvection_on_u_plus_u() {
        let l = u().direct_sum(&u());
        let e1 = ivec_from_i64(&[1, 0, 0, 0]);
        let e2 = ivec_from_i64(&[0, 0, 1, 0]);
        let f1 = ivec_from_i64(&[0, 1, 0, 0]);
        let t = l.eichler_transvection(&e1, &e2).unwrap();
        assert!(t.is_isometry());
        assert_eq!(t.matrix.det(), BigInt::one());
        assert_eq!(t.apply(&f1), ivec_from_i64(&[0, 1, 1, 0]));
        // f = 0 gives the identity
        let id = l.eichler_transvection(&e1, &ivec_from_i64(&[0, 0, 0, 0])).unwrap();
        assert_eq!(id.matrix, IMat::identity(4));
        // violated precondition
        assert!(l.eichler_transvection(&f1, &e2).is_ok());
        let bad = l.eichler_transvection(&ivec_from_i64(&[1, 1, 0, 0]), &e2);
        assert!(bad.is_err());
    }

    #[test]
    fn plane_transvection_on_u_plus_u() {
        let l = u().direct_sum(&u());
        let e1 = ivec_from_i64(&[1, 0, 0, 0]);
        let e2 = ivec_from_i64(&[0, 0, 1, 0]);
        let t = l.plane_transvection(&e1, &e2).unwrap();
        assert!(t.is_isometry());
        assert_eq!(t.matrix.det(), BigInt::one());
        assert_eq!(t.apply(&e1), e1);
        assert_eq!(t.apply(&e2), e2);
        // e = f collapses to the identity
        let id = l.plane_transvection(&e1, &e1).unwrap();
        assert_eq!(id.matrix, IMat::identity(4));
        // swapped arguments compose to the identity
        let s = l.plane_transvection(&e2, &e1).unwrap();
        assert_eq!(t.matrix.mul(&s.matrix), IMat::identity(4));
    }

    #[test]
    fn isometry_checks() {
        let l = u();
        let id = LatticeMap { matrix: IMat::identity(2), source: l.clone(), target: l.clone() };
        assert!(id.is_isometry());
        let doubling =
            LatticeMap { matrix: imat_from_i64(&[&[2, 0], &[0, 2]]), source: l.clone(), target: l };
        assert!(!doubling.is_isometry());
    }

    #[test]
    fn small_rank_isometry_search() {
        // the g = 4 triple Gram from the digonal locus is U + I(-2)
        let m = IntLattice::new(imat_from_i64(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]), None).unwrap();
        let target = u().direct_sum(
            &make_standard(StandardLattice::I(BigInt::from(-2)), 1).unwrap(),
        );
        let w = small_rank_isometric(&m, &target, 3).unwrap().expect("witness");
        assert!(w.is_isometry());
        // a lattice is isometric to itself via the identity
        let selfw = small_rank_isometric(&m, &m, 1).unwrap().unwrap();
        assert_eq!(selfw.matrix, IMat::identity(3));
        // determinant rejection
        let u2 = u().rescale(&BigInt::from(2)).unwrap();
        assert!(small_rank_isometric(&u(), &u2, 5).unwrap().is_none());
        // guard
        let big = u().direct_sum(&u()).direct_sum(&u());
        assert!(small_rank_isometric(&big, &big.clone(), 1).is_err());
    }

    #[test]
    fn complement_of_saturated_completes() {
        let rows = vec![ivec_from_i64(&[1, 0, 2])];
        let comp = complement_of_saturated(&rows, 3);
        assert_eq!(comp.len(), 2);
        let mut all = rows.clone();
        all.extend(comp);
        assert_eq!(IMat::from_rows(all).det().abs(), BigInt::one());
    }
}
