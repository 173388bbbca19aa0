//! Decidable divisor and automorphy criteria on weighted hyperplane
//! arrangements: the Q-Cartier proportionality test, separating-wall
//! cocycles, piecewise-linear functions on arrangement fans, invariance
//! checks against supplied isometries, and Weyl points of chambers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cones::{Fan, RationalCone};
use crate::error::{Error, Result};
use crate::mat::{dot_int, dot_rat, ivec_to_q, IMat, IVec, Mat, QMat, QVec};

/// A finite list of hyperplane functionals with integer multiplicities,
/// standing in for a group orbit arrangement restricted to a window.
#[derive(Debug, Clone)]
pub struct WeightedArrangement {
    pub members: Vec<(IVec, BigInt)>,
}

impl WeightedArrangement {
    pub fn new(members: Vec<(IVec, BigInt)>) -> Result<Self> {
        for (f, m) in &members {
            if f.iter().all(|x| x.is_zero()) {
                return Err(Error::Precondition("zero functional in arrangement".into()));
            }
            if m.is_zero() {
                return Err(Error::Precondition("zero multiplicity in arrangement".into()));
            }
        }
        // functionals must be pairwise non-proportional
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let a = crate::mat::primitive_part(&members[i].0).unwrap();
                let b = crate::mat::primitive_part(&members[j].0).unwrap();
                let bneg: IVec = b.iter().map(|x| -x).collect();
                if a == b || a == bneg {
                    return Err(Error::Precondition(
                        "proportional functionals in arrangement".into(),
                    ));
                }
            }
        }
        Ok(WeightedArrangement { members })
    }

    pub fn functionals(&self) -> Vec<IVec> {
        self.members.iter().map(|(f, _)| f.clone()).collect()
    }
}

/// Exact rational scalar `c` with `sum_H m_H l_H l_H^T = c q`, or None when
/// no such scalar exists. When `Some(c)` is returned the matrix identity
/// holds exactly; when `None`, the system is exactly inconsistent.
pub fn qcartier_proportional(q: &QMat, arr: &WeightedArrangement) -> Result<Option<BigRational>> {
    let n = q.rows;
    if q.cols != n {
        return Err(Error::DimensionMismatch("form must be square".into()));
    }
    for (f, _) in &arr.members {
        if f.len() != n {
            return Err(Error::DimensionMismatch("functional length".into()));
        }
    }
    let mut s: QMat = Mat::zero(n, n);
    for (f, m) in &arr.members {
        let mq = BigRational::from(m.clone());
        for i in 0..n {
            for j in 0..n {
                let t = BigRational::from(&f[i] * &f[j]) * &mq;
                s[(i, j)] += t;
            }
        }
    }
    // find a candidate scalar from the first nonzero entry of q
    let mut c: Option<BigRational> = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if !q[(i, j)].is_zero() {
                c = Some(&s[(i, j)] / &q[(i, j)]);
                break 'outer;
            }
        }
    }
    let c = match c {
        Some(c) => c,
        None => {
            // q = 0: proportional iff s = 0
            let zero = s.data.iter().all(|x| x.is_zero());
            return Ok(if zero { Some(BigRational::zero()) } else { None });
        }
    };
    for i in 0..n {
        for j in 0..n {
            if s[(i, j)] != &c * &q[(i, j)] {
                return Ok(None);
            }
        }
    }
    Ok(Some(c))
}

/// True iff the arrangement functionals span the full dual of a space of the
/// given rank, i.e. their common zero set is 0.
pub fn noproduct_condition(rank: usize, arr: &WeightedArrangement) -> bool {
    if rank == 0 {
        return true;
    }
    if arr.members.is_empty() {
        return false;
    }
    IMat::from_rows(arr.functionals()).rank() == rank
}

fn interior_point_checked(c: &RationalCone) -> Result<IVec> {
    if c.is_zero_cone() {
        return Err(Error::Precondition("cone has empty interior".into()));
    }
    Ok(c.interior_point())
}

/// Members whose functional takes strictly opposite signs on the interiors
/// of the two cones.
pub fn separating_walls<'a>(
    sigma: &RationalCone,
    sigma2: &RationalCone,
    arr: &'a WeightedArrangement,
) -> Result<Vec<&'a (IVec, BigInt)>> {
    let p1 = interior_point_checked(sigma)?;
    let p2 = interior_point_checked(sigma2)?;
    Ok(arr
        .members
        .iter()
        .filter(|(f, _)| {
            let a = dot_int(f, &p1);
            let b = dot_int(f, &p2);
            (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive())
        })
        .collect())
}

/// Linear part of the logarithm of the separating-wall cocycle: the sum over
/// separating walls of `m_H f_H`, each `f_H` oriented positive on `sigma`.
pub fn cocycle_exponent(
    sigma: &RationalCone,
    sigma2: &RationalCone,
    arr: &WeightedArrangement,
) -> Result<QVec> {
    let n = sigma.ambient;
    let p1 = interior_point_checked(sigma)?;
    let walls = separating_walls(sigma, sigma2, arr)?;
    let mut out = vec![BigRational::zero(); n];
    for (f, m) in walls {
        let sign = if dot_int(f, &p1).is_positive() { BigInt::one() } else { -BigInt::one() };
        for (o, fi) in out.iter_mut().zip(f) {
            *o += BigRational::from(fi * &sign * m);
        }
    }
    Ok(out)
}

/// A continuous piecewise-linear function on the maximal cones of a fan.
#[derive(Debug, Clone)]
pub struct PLFunction {
    /// (maximal cone, linear part on it)
    pub pieces: Vec<(RationalCone, QVec)>,
}

impl PLFunction {
    /// Evaluate at a rational point lying in the fan's support.
    pub fn eval(&self, x: &[BigRational]) -> Result<BigRational> {
        for (c, lin) in &self.pieces {
            if c.contains_q(x) {
                return Ok(dot_rat(lin, x));
            }
        }
        Err(Error::Precondition("point is outside the fan support".into()))
    }

    /// Exact continuity across every shared facet: the two linear parts agree
    /// on every ray of the intersection.
    pub fn check_continuity(&self) -> Result<()> {
        for (i, (c1, l1)) in self.pieces.iter().enumerate() {
            for (c2, l2) in self.pieces.iter().skip(i + 1) {
                let common = c1.intersect(c2)?;
                for r in &common.rays {
                    let rq = ivec_to_q(r);
                    if dot_rat(l1, &rq) != dot_rat(l2, &rq) {
                        return Err(Error::Precondition(
                            "piecewise-linear data is discontinuous across a shared face".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Assemble the piecewise-linear function whose restriction to a chamber is
/// `rho` plus the cocycle exponent from the base chamber; continuity is
/// verified before returning.
pub fn build_pl_function(
    fan: &Fan,
    arr: &WeightedArrangement,
    rho: &[BigRational],
    base: &RationalCone,
) -> Result<PLFunction> {
    if fan.find(base).is_none() {
        return Err(Error::Precondition("base chamber is not a member of the fan".into()));
    }
    let maximal = fan.maximal_cones();
    if !maximal.iter().any(|c| c.key() == base.key()) {
        return Err(Error::Precondition("base cone is not maximal".into()));
    }
    let mut pieces = Vec::new();
    for c in maximal {
        let exp = cocycle_exponent(base, c, arr)?;
        let lin: QVec = rho.iter().zip(&exp).map(|(a, b)| a + b).collect();
        pieces.push((c.clone(), lin));
    }
    let pl = PLFunction { pieces };
    pl.check_continuity()?;
    Ok(pl)
}

/// r(gamma x) = r(x) for every ray generator x of the fan and every supplied
/// isometry gamma; exact rational comparison. Errors when a generator does
/// not preserve the fan support.
pub fn pl_invariance_check(pl: &PLFunction, generators: &[IMat]) -> Result<bool> {
    let rays: Vec<IVec> = {
        let mut rs: Vec<IVec> = pl.pieces.iter().flat_map(|(c, _)| c.rays.clone()).collect();
        rs.sort();
        rs.dedup();
        rs
    };
    for g in generators {
        for r in &rays {
            let image = g.mul_vec(r);
            let image_q = ivec_to_q(&image);
            let moved = pl.eval(&image_q).map_err(|_| {
                Error::Precondition("generator does not preserve the fan support".into())
            })?;
            let here = pl.eval(&ivec_to_q(r))?;
            if moved != here {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solve for a rational linear part `rho` making the piecewise-linear
/// function invariant under the supplied generators; exact linear system,
/// complete relative to those generators only.
pub fn solve_rho(
    fan: &Fan,
    arr: &WeightedArrangement,
    base: &RationalCone,
    generators: &[IMat],
) -> Result<Option<QVec>> {
    let n = base.ambient;
    let maximal: Vec<RationalCone> = fan.maximal_cones().into_iter().cloned().collect();
    let chamber_of = |x: &QVec| -> Result<usize> {
        maximal
            .iter()
            .position(|c| c.contains_q(x))
            .ok_or_else(|| Error::Precondition("generator leaves the fan support".into()))
    };
    let exps: Vec<QVec> =
        maximal.iter().map(|c| cocycle_exponent(base, c, arr)).collect::<Result<Vec<_>>>()?;
    let rays: Vec<IVec> = {
        let mut rs: Vec<IVec> = maximal.iter().flat_map(|c| c.rays.clone()).collect();
        rs.sort();
        rs.dedup();
        rs
    };
    // rho . (gx - x) = exp_{c(x)} . x - exp_{c(gx)} . gx  for all rays x
    let mut rows: Vec<QVec> = Vec::new();
    let mut rhs: Vec<BigRational> = Vec::new();
    for g in generators {
        for r in &rays {
            let x = ivec_to_q(r);
            let gx = ivec_to_q(&g.mul_vec(r));
            let cx = chamber_of(&x)?;
            let cgx = chamber_of(&gx)?;
            let row: QVec = gx.iter().zip(&x).map(|(a, b)| a - b).collect();
            let b = dot_rat(&exps[cx], &x) - dot_rat(&exps[cgx], &gx);
            rows.push(row);
            rhs.push(b);
        }
    }
    if rows.is_empty() {
        return Ok(Some(vec![BigRational::zero(); n]));
    }
    let a = QMat::from_rows(rows);
    Ok(a.solve(&rhs))
}

/// A rational interior point of the chamber avoiding every member of the
/// arrangement: the ray sum, perturbed along the first ray by 1/k for the
/// least k avoiding all functionals.
pub fn chamber_weyl_point(
    chamber: &RationalCone,
    arr: &WeightedArrangement,
) -> Result<QVec> {
    let p = interior_point_checked(chamber)?;
    // a member vanishing on the whole chamber means the input was not a
    // chamber of its own arrangement
    for (f, _) in &arr.members {
        if chamber.rays.iter().all(|r| dot_int(f, r).is_zero()) {
            return Err(Error::Precondition(
                "a member vanishes identically on the chamber".into(),
            ));
        }
    }
    let pq = ivec_to_q(&p);
    if arr.members.iter().all(|(f, _)| !dot_int(f, &p).is_zero()) {
        return Ok(pq);
    }
    let r0 = ivec_to_q(&chamber.rays[0]);
    // a functional vanishing on both p and the first ray cannot be avoided
    // by this perturbation
    for (f, _) in &arr.members {
        let fq = ivec_to_q(f);
        if dot_rat(&fq, &pq).is_zero() && dot_rat(&fq, &r0).is_zero() {
            return Err(Error::BoundExhausted(
                "perturbation along the first ray cannot avoid a member".into(),
            ));
        }
    }
    for k in 1..=1_000_000i64 {
        let kq = BigRational::from(BigInt::from(k));
        let cand: QVec =
            pq.iter().zip(&r0).map(|(a, b)| a + b / &kq).collect();
        if arr.members.iter().all(|(f, _)| !dot_rat(&ivec_to_q(f), &cand).is_zero()) {
            return Ok(cand);
        }
    }
    Err(Error::BoundExhausted("no perturbation denominator below 10^6 works".into()))
}

/// Sign of the self-pairing of a chamber point, plus the two other testable
/// clauses of the chamber-structure criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberStructureReport {
    /// Sign of v.v: 1, 0 or -1.
    pub v_norm_sign: i8,
    /// Our cone representations are always finitely generated; reported for
    /// the restriction that is actually seen.
    pub is_rational_polyhedral: bool,
    /// The isotropic edge of the chamber whose span contains v, if any.
    pub isotropic_edge: Option<IVec>,
}

pub fn chamber_structure_report(
    chamber: &RationalCone,
    v: &[BigRational],
    form: &QMat,
) -> Result<ChamberStructureReport> {
    if v.len() != chamber.ambient {
        return Err(Error::DimensionMismatch("point length".into()));
    }
    if !chamber.contains_q(v) {
        return Err(Error::Precondition("point is outside the chamber".into()));
    }
    let norm = dot_rat(v, &form.mul_vec(v));
    let v_norm_sign = if norm.is_positive() {
        1
    } else if norm.is_negative() {
        -1
    } else {
        0
    };
    let mut isotropic_edge = None;
    for r in &chamber.rays {
        let rq = ivec_to_q(r);
        let rnorm = dot_rat(&rq, &form.mul_vec(&rq));
        if !rnorm.is_zero() {
            continue;
        }
        // v proportional to r?
        let mut ratio: Option<BigRational> = None;
        let mut proportional = true;
        for (vi, ri) in v.iter().zip(&rq) {
            if ri.is_zero() {
                if !vi.is_zero() {
                    proportional = false;
                    break;
                }
            } else {
                let q = vi / ri;
                match &ratio {
                    None => ratio = Some(q),
                    Some(r0) if *r0 != q => {
                        proportional = false;
                        break;
                    }
                    _ => {}
                }
            }
        }
        if proportional {
            isotropic_edge = Some(r.clone());
            break;
        }
    }
    Ok(ChamberStructureReport {
        v_norm_sign,
        is_rational_polyhedral: true,
        isotropic_edge,
    })
}
