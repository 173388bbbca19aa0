//! Exhaustive vector searches: short vectors in definite lattices by exact
//! Fincke-Pohst, windowed box searches in indefinite lattices, and complete
//! isotropic enumeration in hyperbolic-plus-definite splittings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::mat::{canonical_sign, IVec, QMat};

/// Norm constraint: a single value or an inclusive range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormTarget {
    Exact(BigInt),
    Range(BigInt, BigInt),
}

impl NormTarget {
    pub fn contains(&self, x: &BigInt) -> bool {
        match self {
            NormTarget::Exact(t) => x == t,
            NormTarget::Range(a, b) => a <= x && x <= b,
        }
    }

    fn bounds(&self) -> (BigInt, BigInt) {
        match self {
            NormTarget::Exact(t) => (t.clone(), t.clone()),
            NormTarget::Range(a, b) => (a.clone(), b.clone()),
        }
    }
}

/// Constraints for a vector search. `box_bound` gives per-coordinate bounds
/// and is required in indefinite mode.
#[derive(Debug, Clone)]
pub struct VectorQuery {
    pub norm: NormTarget,
    pub pairings: Vec<(IVec, BigInt)>,
    pub primitive_only: bool,
    pub box_bound: Option<Vec<i64>>,
}

impl VectorQuery {
    pub fn norm(norm: BigInt) -> Self {
        VectorQuery {
            norm: NormTarget::Exact(norm),
            pairings: Vec::new(),
            primitive_only: false,
            box_bound: None,
        }
    }

    pub fn norm_range(lo: BigInt, hi: BigInt) -> Self {
        VectorQuery {
            norm: NormTarget::Range(lo, hi),
            pairings: Vec::new(),
            primitive_only: false,
            box_bound: None,
        }
    }

    pub fn with_pairing(mut self, v: IVec, value: BigInt) -> Self {
        self.pairings.push((v, value));
        self
    }

    pub fn primitive(mut self) -> Self {
        self.primitive_only = true;
        self
    }

    pub fn with_box(mut self, b: i64, rank: usize) -> Self {
        self.box_bound = Some(vec![b; rank]);
        self
    }

    pub fn with_box_vec(mut self, b: Vec<i64>) -> Self {
        self.box_bound = Some(b);
        self
    }

    /// Solutions come in +- pairs exactly when every pairing value is zero;
    /// only then is canonical-sign deduplication meaningful.
    fn sign_symmetric(&self) -> bool {
        self.pairings.iter().all(|(_, v)| v.is_zero())
    }

    fn satisfied_by(&self, l: &IntLattice, v: &[BigInt]) -> Result<bool> {
        if v.iter().all(|x| x.is_zero()) {
            return Ok(false);
        }
        if !self.norm.contains(&l.norm(v)?) {
            return Ok(false);
        }
        for (w, val) in &self.pairings {
            if &l.inner(v, w)? != val {
                return Ok(false);
            }
        }
        if self.primitive_only && !l.is_primitive(v)? {
            return Ok(false);
        }
        Ok(true)
    }
}

/// Complete list of nonzero vectors of a definite lattice meeting the query,
/// by Fincke-Pohst with exact rational Cholesky. For sign-symmetric queries
/// each +- pair is returned once, first nonzero coordinate positive.
pub fn short_vectors(l: &IntLattice, query: &VectorQuery) -> Result<Vec<IVec>> {
    let n = l.rank();
    if n == 0 {
        return Ok(Vec::new());
    }
    let sig = l.signature();
    let flip = if sig.positive == n {
        false
    } else if sig.negative == n {
        true
    } else {
        return Err(Error::NotDefinite(
            "short_vectors needs a definite lattice; use vectors_in_box".into(),
        ));
    };
    let (lo, hi) = query.norm.bounds();
    // bound on the positive-definite norm after an optional global sign flip
    let cap = if flip { -lo } else { hi };
    if cap.is_negative() {
        return Ok(Vec::new());
    }
    let gram_pos =
        if flip { l.gram.scale(&BigInt::from(-1)) } else { l.gram.clone() };
    let chol = cholesky(&gram_pos.to_rational())?;
    let mut raw: Vec<IVec> = Vec::new();
    let cap_q = BigRational::from(cap);
    let mut x = vec![BigInt::zero(); n];
    enumerate_fp(&chol, n, &cap_q, &mut x, &mut raw);
    finalize(l, query, raw)
}

struct Cholesky {
    d: Vec<BigRational>,
    u: QMat,
}

/// G = U^T D U with U unit upper triangular; errors unless positive definite.
fn cholesky(g: &QMat) -> Result<Cholesky> {
    let n = g.rows;
    let mut d = vec![BigRational::zero(); n];
    let mut u = QMat::identity(n);
    for i in 0..n {
        let mut di = g[(i, i)].clone();
        for k in 0..i {
            let t = &d[k] * &u[(k, i)] * &u[(k, i)];
            di -= t;
        }
        if !di.is_positive() {
            return Err(Error::NotDefinite("gram matrix is not positive definite".into()));
        }
        for j in i + 1..n {
            let mut x = g[(i, j)].clone();
            for k in 0..i {
                let t = &d[k] * &u[(k, i)] * &u[(k, j)];
                x -= t;
            }
            u[(i, j)] = x / &di;
        }
        d[i] = di;
    }
    Ok(Cholesky { d, u })
}

/// Depth-first Fincke-Pohst over Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2,
/// assigning coordinates from the last to the first.
fn enumerate_fp(
    ch: &Cholesky,
    level: usize,
    budget: &BigRational,
    x: &mut [BigInt],
    out: &mut Vec<IVec>,
) {
    if level == 0 {
        out.push(x.to_vec());
        return;
    }
    let i = level - 1;
    let mut center = BigRational::zero();
    for j in level..x.len() {
        center += &ch.u[(i, j)] * BigRational::from(x[j].clone());
    }
    // integers t with d_i (t + center)^2 <= budget form an interval around
    // -center; walk outward in both directions
    let start = (-&center).floor().to_integer();
    let fits = |t: &BigInt| -> Option<BigRational> {
        let s = BigRational::from(t.clone()) + &center;
        let used = &ch.d[i] * &s * &s;
        if &used <= budget {
            Some(budget - used)
        } else {
            None
        }
    };
    let mut t = start.clone();
    while let Some(rem) = fits(&t) {
        x[i] = t.clone();
        enumerate_fp(ch, i, &rem, x, out);
        t -= 1;
    }
    let mut t = &start + 1;
    while let Some(rem) = fits(&t) {
        x[i] = t.clone();
        enumerate_fp(ch, i, &rem, x, out);
        t += 1;
    }
    x[i] = BigInt::zero();
}

fn finalize(l: &IntLattice, query: &VectorQuery, raw: Vec<IVec>) -> Result<Vec<IVec>> {
    let symmetric = query.sign_symmetric();
    let mut out: Vec<IVec> = Vec::new();
    for v in raw {
        if !query.satisfied_by(l, &v)? {
            continue;
        }
        out.push(if symmetric { canonical_sign(&v) } else { v });
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Complete enumeration within an explicit coordinate box; a window into an
/// infinite orbit, never a completeness claim beyond the box.
pub fn vectors_in_box(l: &IntLattice, query: &VectorQuery) -> Result<Vec<IVec>> {
    let n = l.rank();
    let bounds = query
        .box_bound
        .clone()
        .ok_or_else(|| Error::Precondition("vectors_in_box requires a box bound".into()))?;
    if bounds.len() != n {
        return Err(Error::DimensionMismatch("box bound length".into()));
    }
    if bounds.iter().any(|&b| b < 0) {
        return Err(Error::Precondition("box bounds must be nonnegative".into()));
    }
    let gram: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    l.gram[(i, j)].to_i128().ok_or_else(|| {
                        Error::Unsupported("gram entry exceeds the i128 fast path".into())
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let (lo, hi) = query.norm.bounds();
    let (lo, hi) = (
        lo.to_i128().ok_or_else(|| Error::Unsupported("norm bound too large".into()))?,
        hi.to_i128().ok_or_else(|| Error::Unsupported("norm bound too large".into()))?,
    );
    // linear functionals w = G v for the pairing constraints
    let mut functionals: Vec<(Vec<i128>, i128)> = Vec::new();
    for (v, val) in &query.pairings {
        if v.len() != n {
            return Err(Error::DimensionMismatch("pairing vector length".into()));
        }
        let w = l.gram.mul_vec(v);
        let wi: Vec<i128> = w
            .iter()
            .map(|x| x.to_i128().ok_or_else(|| Error::Unsupported("pairing overflow".into())))
            .collect::<Result<Vec<_>>>()?;
        let vi =
            val.to_i128().ok_or_else(|| Error::Unsupported("pairing value too large".into()))?;
        functionals.push((wi, vi));
    }
    // suffix reach of each functional: sum_{i>=k} |w_i| b_i
    let func_reach: Vec<Vec<i128>> = functionals
        .iter()
        .map(|(w, _)| {
            let mut reach = vec![0i128; n + 1];
            for k in (0..n).rev() {
                reach[k] = reach[k + 1] + w[k].abs() * bounds[k] as i128;
            }
            reach
        })
        .collect();
    // suffix-suffix norm reach: sum_{i,j>=k} |g_ij| b_i b_j, improved to a
    // one-sided bound when the trailing block is semidefinite
    let mut suffix_abs = vec![0i128; n + 1];
    for k in (0..n).rev() {
        let mut s = suffix_abs[k + 1];
        s += gram[k][k].abs() * (bounds[k] as i128) * (bounds[k] as i128);
        for j in k + 1..n {
            s += 2 * gram[k][j].abs() * (bounds[k] as i128) * (bounds[j] as i128);
        }
        suffix_abs[k] = s;
    }
    let trailing_sign: Vec<i8> = (0..=n)
        .map(|k| {
            let m = n - k;
            if m == 0 {
                return 0;
            }
            let sub = crate::mat::Mat::from_rows(
                (k..n)
                    .map(|i| (k..n).map(|j| l.gram[(i, j)].clone()).collect())
                    .collect::<Vec<_>>(),
            );
            let (pos, neg, _) = crate::mat::symmetric_signature(&sub.to_rational());
            if neg == 0 {
                1 // positive semidefinite: suffix-suffix part >= 0
            } else if pos == 0 {
                -1 // negative semidefinite: suffix-suffix part <= 0
            } else {
                0
            }
        })
        .collect();

    let symmetric = query.sign_symmetric();
    let mut x = vec![0i64; n];
    let mut cross = vec![0i128; n]; // cross[j] = sum_{i<k} g_ij x_i
    let mut raw: Vec<IVec> = Vec::new();
    let ctx = BoxCtx {
        gram: &gram,
        bounds: &bounds,
        norm_range: (lo, hi),
        functionals: &functionals,
        func_reach: &func_reach,
        suffix_abs: &suffix_abs,
        trailing_sign: &trailing_sign,
        symmetric,
    };
    search_box(&ctx, 0, 0, true, &mut x, &mut cross, &mut raw);
    finalize(l, query, raw)
}

struct BoxCtx<'a> {
    gram: &'a [Vec<i128>],
    bounds: &'a [i64],
    norm_range: (i128, i128),
    functionals: &'a [(Vec<i128>, i128)],
    func_reach: &'a [Vec<i128>],
    suffix_abs: &'a [i128],
    trailing_sign: &'a [i8],
    symmetric: bool,
}

fn search_box(
    ctx: &BoxCtx,
    k: usize,
    prefix_norm: i128,
    all_zero: bool,
    x: &mut [i64],
    cross: &mut [i128],
    out: &mut Vec<IVec>,
) {
    let n = x.len();
    if k == n {
        if prefix_norm >= ctx.norm_range.0 && prefix_norm <= ctx.norm_range.1 {
            out.push(x.iter().map(|&v| BigInt::from(v)).collect());
        }
        return;
    }
    // feasibility of the remaining subtree
    let cross_reach: i128 = (k..n).map(|j| 2 * cross[j].abs() * ctx.bounds[j] as i128).sum();
    let (suf_lo, suf_hi) = match ctx.trailing_sign[k] {
        1 => (0, ctx.suffix_abs[k]),
        -1 => (-ctx.suffix_abs[k], 0),
        _ => (-ctx.suffix_abs[k], ctx.suffix_abs[k]),
    };
    if prefix_norm + cross_reach + suf_hi < ctx.norm_range.0
        || prefix_norm - cross_reach + suf_lo > ctx.norm_range.1
    {
        return;
    }
    for (f, (w, val)) in ctx.functionals.iter().enumerate() {
        let partial: i128 = (0..k).map(|i| w[i] * x[i] as i128).sum();
        if partial + ctx.func_reach[f][k] < *val || partial - ctx.func_reach[f][k] > *val {
            return;
        }
    }
    let low = if ctx.symmetric && all_zero { 0 } else { -ctx.bounds[k] };
    for v in low..=ctx.bounds[k] {
        x[k] = v;
        let vi = v as i128;
        let new_norm = prefix_norm + 2 * cross[k] * vi + ctx.gram[k][k] * vi * vi;
        for j in k + 1..n {
            cross[j] += ctx.gram[k][j] * vi;
        }
        search_box(ctx, k + 1, new_norm, all_zero && v == 0, x, cross, out);
        for j in k + 1..n {
            cross[j] -= ctx.gram[k][j] * vi;
        }
    }
    x[k] = 0;
}

/// Complete enumeration of isotropic vectors with a fixed pairing against a
/// vector of the leading rank-2 indefinite block, in a lattice presented as
/// (rank-2 indefinite) + (definite). Termination comes from definiteness:
/// the definite component's norm is confined to a finite interval, each value
/// of which leaves a conic-line intersection in the hyperbolic coordinates.
pub fn isotropic_with_definite_part(
    l: &IntLattice,
    pair_with: &IVec,
    pair_value: &BigInt,
    primitive_only: bool,
) -> Result<Vec<IVec>> {
    isotropic_with_definite_part_margin(l, pair_with, pair_value, primitive_only, 0)
}

/// Same as [`isotropic_with_definite_part`] with the internal search interval
/// widened by `margin`; results must be stable in `margin` (saturation).
pub fn isotropic_with_definite_part_margin(
    l: &IntLattice,
    pair_with: &IVec,
    pair_value: &BigInt,
    primitive_only: bool,
    margin: u32,
) -> Result<Vec<IVec>> {
    let n = l.rank();
    if n < 2 {
        return Err(Error::Precondition("need rank >= 2".into()));
    }
    if pair_with.len() != n {
        return Err(Error::DimensionMismatch("pairing vector length".into()));
    }
    // verify the split presentation
    for i in 0..2 {
        for j in 2..n {
            if !l.gram[(i, j)].is_zero() {
                return Err(Error::Precondition(
                    "gram is not block diagonal (rank-2 block first)".into(),
                ));
            }
        }
    }
    let h_gram = crate::mat::Mat::from_rows(vec![
        vec![l.gram[(0, 0)].clone(), l.gram[(0, 1)].clone()],
        vec![l.gram[(1, 0)].clone(), l.gram[(1, 1)].clone()],
    ]);
    let h = IntLattice::new(h_gram, None)?;
    let hs = h.signature();
    if (hs.positive, hs.negative) != (1, 1) {
        return Err(Error::Precondition(
            "leading rank-2 block must have signature (1,1)".into(),
        ));
    }
    let d_rows: Vec<IVec> =
        (2..n).map(|i| (2..n).map(|j| l.gram[(i, j)].clone()).collect()).collect();
    let d = IntLattice::new(crate::mat::Mat::from_rows(d_rows), None)?;
    let ds = d.signature();
    let d_rank = n - 2;
    let d_neg = if d_rank == 0 {
        true
    } else if ds.negative == d_rank {
        true
    } else if ds.positive == d_rank {
        false
    } else {
        return Err(Error::Precondition("trailing block must be definite".into()));
    };
    if pair_with[2..].iter().any(|c| !c.is_zero()) {
        return Err(Error::Precondition(
            "pairing vector must lie in the rank-2 block for a complete enumeration".into(),
        ));
    }
    let w = vec![pair_with[0].clone(), pair_with[1].clone()];
    if w.iter().all(|c| c.is_zero()) {
        return Err(Error::Precondition("pairing vector must be nonzero".into()));
    }
    let q = h.norm(&w)?;

    // degenerate case: isotropic pairing vector, zero target
    if q.is_zero() {
        if !pair_value.is_zero() || !primitive_only {
            return Err(Error::Precondition(
                "isotropic pairing vector needs value 0 and primitive_only \
                 (solution set is infinite otherwise)"
                    .into(),
            ));
        }
        let wp = crate::mat::primitive_part(&w).expect("nonzero");
        let mut v = vec![BigInt::zero(); n];
        v[0] = wp[0].clone();
        v[1] = wp[1].clone();
        return Ok(vec![canonical_sign(&v)]);
    }
    // the pairing vector's norm sign must oppose the definite block's sign,
    // otherwise the solution set is infinite
    if q.is_positive() != d_neg {
        return Err(Error::Precondition(
            "pairing vector norm sign must oppose the definite block".into(),
        ));
    }

    // |Q_H(h)| <= t^2/|q| on the pairing line, so the definite norm is confined
    let t2q = BigRational::new(pair_value * pair_value, q.abs());
    let reach = t2q.ceil().to_integer() + BigInt::from(margin);
    let mut out: Vec<IVec> = Vec::new();
    let mut m = BigInt::zero();
    while m <= reach {
        let d_norm = if d_neg { -&m } else { m.clone() };
        let d_parts: Vec<IVec> = if m.is_zero() {
            vec![vec![BigInt::zero(); d_rank]]
        } else if d_rank == 0 {
            Vec::new()
        } else {
            let q = VectorQuery::norm(d_norm.clone());
            let mut parts = short_vectors(&d, &q)?;
            // short_vectors folds +- pairs for symmetric queries; restore both
            let mut both: Vec<IVec> = Vec::new();
            for p in parts.drain(..) {
                both.push(p.iter().map(|c| -c).collect());
                both.push(p);
            }
            both
        };
        if !d_parts.is_empty() {
            let h_solutions = hyperbolic_solutions(&h, &w, pair_value, &(-&d_norm))?;
            for dpart in &d_parts {
                for hsol in &h_solutions {
                    let mut v = hsol.clone();
                    v.extend(dpart.iter().cloned());
                    if primitive_only && !l.is_primitive(&v)? {
                        continue;
                    }
                    debug_assert!(l.norm(&v).unwrap().is_zero());
                    debug_assert_eq!(l.inner(&v, pair_with).unwrap(), *pair_value);
                    out.push(v);
                }
            }
        }
        m += 1;
    }
    if pair_value.is_zero() {
        out = out.iter().map(|v| canonical_sign(v)).collect();
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Integer h in the rank-2 block with pairing t against w and norm `target`:
/// a line meets a conic in at most two points.
fn hyperbolic_solutions(
    h: &IntLattice,
    w: &IVec,
    t: &BigInt,
    target: &BigInt,
) -> Result<Vec<IVec>> {
    let u = h.gram.mul_vec(w); // functional h . w = u . h
    let g = u[0].gcd(&u[1]);
    debug_assert!(!g.is_zero());
    if !(t % &g).is_zero() {
        return Ok(Vec::new());
    }
    // particular solution of u0 a + u1 b = t via extended gcd
    let e = u[0].extended_gcd(&u[1]);
    let scale = t / &g;
    let h0 = vec![&e.x * &scale, &e.y * &scale];
    let z = vec![-(&u[1] / &g), u[0].clone() / &g];
    // Q(h0 + k z) = Q(h0) + 2k phi(h0,z) + k^2 Q(z) = target
    let a = h.norm(&z)?;
    let b = h.inner(&h0, &z)? * BigInt::from(2);
    let c = h.norm(&h0)? - target;
    debug_assert!(!a.is_zero(), "kernel direction cannot be isotropic here");
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return Ok(Vec::new());
    }
    let two_a = BigInt::from(2) * &a;
    let mut sols = Vec::new();
    for root in [(-&b + &s), (-&b - &s)] {
        if (&root % &two_a).is_zero() {
            let k = root / &two_a;
            sols.push(vec![&h0[0] + &k * &z[0], &h0[1] + &k * &z[1]]);
        }
    }
    sols.sort();
    sols.dedup();
    Ok(sols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_standard, StandardLattice};
    use crate::mat::ivec_from_i64;

    fn u() -> IntLattice {
        make_standard(StandardLattice::U, 1).unwrap()
    }

    fn e8m() -> IntLattice {
        make_standard(StandardLattice::E(8), -1).unwrap()
    }

    #[test]
    fn e8_roots() {
        let q = VectorQuery::norm(BigInt::from(-2));
        let roots = short_vectors(&e8m(), &q).unwrap();
        assert_eq!(roots.len(), 120); // 240 roots in +- pairs
        for r in &roots {
            assert_eq!(e8m().norm(r).unwrap(), BigInt::from(-2));
        }
        // no vectors of odd norm in an even lattice
        let q = VectorQuery::norm(BigInt::from(-1));
        assert!(short_vectors(&e8m(), &q).unwrap().is_empty());
    }

    #[test]
    fn a1_single_root() {
        let a1m = make_standard(StandardLattice::A(1), -1).unwrap();
        let q = VectorQuery::norm(BigInt::from(-2));
        let roots = short_vectors(&a1m, &q).unwrap();
        assert_eq!(roots, vec![ivec_from_i64(&[1])]);
    }

    #[test]
    fn indefinite_is_rejected() {
        let q = VectorQuery::norm(BigInt::zero());
        assert!(matches!(short_vectors(&u(), &q), Err(Error::NotDefinite(_))));
    }

    #[test]
    fn box_isotropics_of_u() {
        let q = VectorQuery::norm(BigInt::zero()).primitive().with_box(1, 2);
        let vs = vectors_in_box(&u(), &q).unwrap();
        assert_eq!(vs, vec![ivec_from_i64(&[0, 1]), ivec_from_i64(&[1, 0])]);
        // box 0 leaves only the zero vector, which is filtered
        let q = VectorQuery::norm(BigInt::from(2)).with_box(0, 2);
        assert!(vectors_in_box(&u(), &q).unwrap().is_empty());
        // missing box
        let q = VectorQuery::norm(BigInt::zero());
        assert!(vectors_in_box(&u(), &q).is_err());
    }

    #[test]
    fn box_matches_fincke_pohst_on_definite() {
        // A2 and a denser rank-3 form
        for l in [
            make_standard(StandardLattice::A(2), 1).unwrap(),
            crate::lattice::IntLattice::new(
                crate::mat::imat_from_i64(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 4]]),
                None,
            )
            .unwrap(),
        ] {
            for norm in 1..=8i64 {
                let q = VectorQuery::norm(BigInt::from(norm));
                let fp = short_vectors(&l, &q).unwrap();
                let qb = q.with_box(8, l.rank());
                let bx = vectors_in_box(&l, &qb).unwrap();
                assert_eq!(fp, bx, "norm {}", norm);
            }
        }
    }

    #[test]
    fn enriques_style_complete_enumeration() {
        // U(2) + E8(-2): exactly two isotropic vectors pairing 2 with e+f
        let u2 = u().rescale(&BigInt::from(2)).unwrap();
        let e8m2 = e8m().rescale(&BigInt::from(2)).unwrap();
        let l = u2.direct_sum(&e8m2);
        let mut h_plus = vec![BigInt::zero(); 10];
        h_plus[0] = BigInt::one();
        h_plus[1] = BigInt::one();
        let vs = isotropic_with_definite_part(&l, &h_plus, &BigInt::from(2), true).unwrap();
        let mut e_plus = vec![BigInt::zero(); 10];
        e_plus[0] = BigInt::one();
        let mut f_plus = vec![BigInt::zero(); 10];
        f_plus[1] = BigInt::one();
        assert_eq!(vs, vec![f_plus, e_plus]);
    }

    #[test]
    fn isotropic_pairing_zero_with_isotropic_vector() {
        let l = u().direct_sum(&make_standard(StandardLattice::A(1), -1).unwrap());
        let e = ivec_from_i64(&[1, 0, 0]);
        let vs = isotropic_with_definite_part(&l, &e, &BigInt::zero(), true).unwrap();
        assert_eq!(vs, vec![ivec_from_i64(&[1, 0, 0])]);
        // infinite cases are rejected
        assert!(isotropic_with_definite_part(&l, &e, &BigInt::one(), true).is_err());
        assert!(isotropic_with_definite_part(&l, &e, &BigInt::zero(), false).is_err());
    }

    #[test]
    fn u_plus_a1_cross_checked_against_box() {
        let l = u().direct_sum(&make_standard(StandardLattice::A(1), -1).unwrap());
        let w = ivec_from_i64(&[1, 1, 0]);
        let vs = isotropic_with_definite_part(&l, &w, &BigInt::one(), false).unwrap();
        let q = VectorQuery::norm(BigInt::zero())
            .with_pairing(w.clone(), BigInt::one())
            .with_box(5, 3);
        let bx = vectors_in_box(&l, &q).unwrap();
        assert_eq!(vs, bx);
        assert_eq!(vs, vec![ivec_from_i64(&[0, 1, 0]), ivec_from_i64(&[1, 0, 0])]);
    }

    #[test]
    fn saturation_under_margin() {
        let u2 = u().rescale(&BigInt::from(2)).unwrap();
        let e8m2 = e8m().rescale(&BigInt::from(2)).unwrap();
        let l = u2.direct_sum(&e8m2);
        let mut h_plus = vec![BigInt::zero(); 10];
        h_plus[0] = BigInt::one();
        h_plus[1] = BigInt::one();
        let base =
            isotropic_with_definite_part_margin(&l, &h_plus, &BigInt::from(2), true, 0).unwrap();
        for margin in [1u32, 4, 9] {
            let wider =
                isotropic_with_definite_part_margin(&l, &h_plus, &BigInt::from(2), true, margin)
                    .unwrap();
            assert_eq!(base, wider);
        }
    }

    #[test]
    fn pairing_constraint_box_window() {
        // U+U window: norm 0, pairing 2 against a mixed vector
        let l = u().direct_sum(&u());
        let h = ivec_from_i64(&[0, 0, 1, 3]);
        let q = VectorQuery::norm(BigInt::zero())
            .with_pairing(h.clone(), BigInt::from(2))
            .with_box(2, 4);
        let vs = vectors_in_box(&l, &q).unwrap();
        for v in &vs {
            assert_eq!(l.norm(v).unwrap(), BigInt::zero());
            assert_eq!(l.inner(v, &h).unwrap(), BigInt::from(2));
        }
        assert!(!vs.is_empty());
    }
}
