//! Rational polyhedral cones with exact double description, face lattices,
//! fans cut out of a rational window cone, and the support spaces and
//! isotropic centers attached to fan members by a hyperbolic form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mat::{clear_denominators, dot_int, ivec_to_q, IMat, IVec, QMat};

/// A nondegenerate rational polyhedral cone with both descriptions:
/// `x` lies in the cone iff every `span_normal` vanishes on `x` and every
/// `facet` is nonnegative on `x`. Rays are primitive, extreme and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    pub ambient: usize,
    pub rays: Vec<IVec>,
    pub facets: Vec<IVec>,
    pub span_normals: Vec<IVec>,
}

impl RationalCone {
    /// Convex hull of rays (cone_hull). Errors when the hull contains a line.
    pub fn from_rays(ambient: usize, rays: &[IVec]) -> Result<Self> {
        let mut gens: Vec<IVec> = Vec::new();
        for r in rays {
            if r.len() != ambient {
                return Err(Error::DimensionMismatch("ray length".into()));
            }
            if r.iter().all(|x| x.is_zero()) {
                return Err(Error::Precondition("zero generator".into()));
            }
            gens.push(crate::mat::primitive_part(r).expect("nonzero"));
        }
        gens.sort();
        gens.dedup();
        Self::from_rays_allow_empty(ambient, gens)
    }

    fn from_rays_allow_empty(ambient: usize, gens: Vec<IVec>) -> Result<Self> {
        if gens.is_empty() {
            return Ok(RationalCone {
                ambient,
                rays: Vec::new(),
                facets: Vec::new(),
                span_normals: IMat::identity(ambient).to_rows(),
            });
        }
        // dual cone {y : <y, r> >= 0}; its lineality is the span annihilator
        // and its pointed part carries the facet normals
        let (dual_lines, dual_rays) = dd_from_inequalities(ambient, &gens);
        let mut dual_gens = dual_lines.clone();
        dual_gens.extend(dual_rays.iter().cloned());
        if rank_of(&dual_gens) < ambient {
            return Err(Error::DegenerateCone);
        }
        let span_normals = span_normals_of(&gens, ambient);
        let facets = canonical_facets(&dual_rays, &span_normals, &gens);
        // keep exactly the extreme input rays
        let mut rays: Vec<IVec> = Vec::new();
        for r in gens {
            let mut active: Vec<IVec> = span_normals.clone();
            for f in &facets {
                if dot_int(f, &r).is_zero() {
                    active.push(f.clone());
                }
            }
            if rank_of(&active) == ambient - 1 {
                rays.push(r);
            }
        }
        rays.sort();
        rays.dedup();
        Ok(RationalCone { ambient, rays, facets, span_normals })
    }

    /// Cone cut out by inequalities (cone_cut). Errors when the result
    /// contains a line.
    pub fn from_inequalities(ambient: usize, ineqs: &[IVec]) -> Result<Self> {
        for a in ineqs {
            if a.len() != ambient {
                return Err(Error::DimensionMismatch("functional length".into()));
            }
            if a.iter().all(|x| x.is_zero()) {
                return Err(Error::Precondition("zero functional".into()));
            }
        }
        let (lines, rays) = dd_from_inequalities(ambient, ineqs);
        if !lines.is_empty() {
            return Err(Error::DegenerateCone);
        }
        Self::from_rays_allow_empty(ambient, rays)
    }

    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.span_normals.len()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.span_normals.iter().all(|s| dot_int(s, x).is_zero())
            && self.facets.iter().all(|f| !dot_int(f, x).is_negative())
    }

    pub fn contains_q(&self, x: &[BigRational]) -> bool {
        self.span_normals.iter().all(|s| crate::mat::dot_rat(&ivec_to_q(s), x).is_zero())
            && self.facets.iter().all(|f| !crate::mat::dot_rat(&ivec_to_q(f), x).is_negative())
    }

    /// Sum of the extreme rays: a relative interior point (zero for the
    /// zero cone).
    pub fn interior_point(&self) -> IVec {
        let mut p = vec![BigInt::zero(); self.ambient];
        for r in &self.rays {
            for (pi, ri) in p.iter_mut().zip(r) {
                *pi += ri;
            }
        }
        p
    }

    /// Canonical key for equality testing inside fans.
    pub fn key(&self) -> Vec<IVec> {
        self.rays.clone()
    }

    /// All faces, including the cone itself and the zero cone.
    pub fn faces(&self) -> Vec<RationalCone> {
        let mut seen: BTreeMap<Vec<IVec>, RationalCone> = BTreeMap::new();
        let mut stack = vec![self.clone()];
        seen.insert(self.key(), self.clone());
        while let Some(c) = stack.pop() {
            for f in &c.facets {
                let sub: Vec<IVec> =
                    c.rays.iter().filter(|r| dot_int(f, r).is_zero()).cloned().collect();
                let face = RationalCone::from_rays_allow_empty(self.ambient, sub)
                    .expect("face of a pointed cone is pointed");
                if !seen.contains_key(&face.key()) {
                    seen.insert(face.key(), face.clone());
                    stack.push(face);
                }
            }
        }
        // the zero cone is a face of every pointed cone
        let z = RationalCone::from_rays_allow_empty(self.ambient, Vec::new()).unwrap();
        seen.entry(z.key()).or_insert(z);
        seen.into_values().collect()
    }

    pub fn is_face_of(&self, other: &RationalCone) -> bool {
        other.faces().iter().any(|f| f.key() == self.key())
    }

    pub fn intersect(&self, other: &RationalCone) -> Result<RationalCone> {
        let mut ineqs: Vec<IVec> = Vec::new();
        for s in self.span_normals.iter().chain(&other.span_normals) {
            ineqs.push(s.clone());
            ineqs.push(s.iter().map(|x| -x).collect());
        }
        ineqs.extend(self.facets.iter().cloned());
        ineqs.extend(other.facets.iter().cloned());
        if ineqs.is_empty() {
            return RationalCone::from_rays_allow_empty(self.ambient, Vec::new());
        }
        RationalCone::from_inequalities(self.ambient, &ineqs)
    }
}

/// Saturated integer basis of the annihilator of a span.
fn span_normals_of(gens: &[IVec], ambient: usize) -> Vec<IVec> {
    if gens.is_empty() {
        return IMat::identity(ambient).to_rows();
    }
    IMat::from_rows(gens.to_vec()).int_kernel()
}

fn rank_of(vecs: &[IVec]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    IMat::from_rows(vecs.to_vec()).rank()
}

/// Reduce dual rays modulo the dual lineality (= span annihilator) by
/// projecting onto the span of the cone, then primitivize and sort.
fn canonical_facets(dual_rays: &[IVec], span_normals: &[IVec], gens: &[IVec]) -> Vec<IVec> {
    let mut facets: Vec<IVec> = Vec::new();
    if span_normals.is_empty() {
        facets = dual_rays.to_vec();
    } else {
        // orthogonal projection onto span(gens) with exact rationals,
        // computed from an independent subset of the generators
        let indep = independent_rows(gens);
        let b = IMat::from_rows(indep).to_rational();
        let bt = b.transpose();
        let bbt_inv = b.mul(&bt).inverse().expect("independent rows");
        for r in dual_rays {
            let rq = ivec_to_q(r);
            let br = b.mul_vec(&rq);
            let coef = bbt_inv.mul_vec(&br);
            let proj = bt.mul_vec(&coef);
            let p = clear_denominators(&proj);
            if p.iter().any(|x| !x.is_zero()) {
                facets.push(p);
            }
        }
    }
    let mut out: Vec<IVec> = facets
        .iter()
        .map(|f| crate::mat::primitive_part(f).expect("nonzero facet"))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn independent_rows(rows: &[IVec]) -> Vec<IVec> {
    let mut picked: Vec<IVec> = Vec::new();
    for r in rows {
        let mut cand = picked.clone();
        cand.push(r.clone());
        if rank_of(&cand) > picked.len() {
            picked = cand;
        }
    }
    picked
}

/// Double description: lineality and extreme rays of `{x : a.x >= 0}`.
/// Inequalities are inserted one at a time; rays are kept extreme via an
/// exact rank test against the active constraints inserted so far.
pub fn dd_from_inequalities(ambient: usize, ineqs: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
    let mut lines: Vec<IVec> = IMat::identity(ambient).to_rows();
    let mut rays: Vec<IVec> = Vec::new();
    let mut processed: Vec<IVec> = Vec::new();
    for a in ineqs {
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        let line_hit = lines.iter().position(|l| !dot_int(a, l).is_zero());
        if let Some(idx) = line_hit {
            let mut l0 = lines.remove(idx);
            if dot_int(a, &l0).is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
            }
            let al0 = dot_int(a, &l0);
            // project the other generators onto a's kernel along l0
            lines = lines
                .iter()
                .filter_map(|l| {
                    let c = dot_int(a, l);
                    let v: IVec =
                        l.iter().zip(&l0).map(|(li, l0i)| li * &al0 - l0i * &c).collect();
                    crate::mat::primitive_part(&v)
                })
                .collect();
            rays = rays
                .iter()
                .filter_map(|r| {
                    let c = dot_int(a, r);
                    let v: IVec =
                        r.iter().zip(&l0).map(|(ri, l0i)| ri * &al0 - l0i * &c).collect();
                    crate::mat::primitive_part(&v)
                })
                .collect();
            rays.push(l0);
        } else {
            let evals: Vec<BigInt> = rays.iter().map(|r| dot_int(a, r)).collect();
            if evals.iter().any(|e| e.is_negative()) {
                let mut next: Vec<IVec> = Vec::new();
                for (r, e) in rays.iter().zip(&evals) {
                    if !e.is_negative() {
                        next.push(r.clone());
                    }
                }
                for (p, ep) in rays.iter().zip(&evals) {
                    if !ep.is_positive() {
                        continue;
                    }
                    for (m, em) in rays.iter().zip(&evals) {
                        if !em.is_negative() {
                            continue;
                        }
                        let v: IVec = p
                            .iter()
                            .zip(m)
                            .map(|(pi, mi)| {
                                let t1 = ep * mi;
                                let t2 = em * pi;
                                t1 - t2
                            })
                            .collect();
                        if let Some(w) = crate::mat::primitive_part(&v) {
                            next.push(w);
                        }
                    }
                }
                rays = next;
            }
        }
        processed.push(a.clone());
        rays.sort();
        rays.dedup();
        // extremeness: the active inequalities must cut the ray's direction
        // out of the current lineality
        let need = ambient - lines.len() - 1;
        rays.retain(|r| {
            let active: Vec<IVec> =
                processed.iter().filter(|q| dot_int(q, r).is_zero()).cloned().collect();
            rank_of(&active) >= need
        });
    }
    (lines, rays)
}

/// A finite face-closed cone collection with an ambient symmetric form.
#[derive(Debug, Clone)]
pub struct Fan {
    pub cones: Vec<RationalCone>,
    pub form: QMat,
}

impl Fan {
    /// Face closure and pairwise common-face checks, both exact.
    pub fn validate(&self) -> Result<()> {
        let keys: BTreeMap<Vec<IVec>, usize> =
            self.cones.iter().enumerate().map(|(i, c)| (c.key(), i)).collect();
        for c in &self.cones {
            for f in c.faces() {
                if !keys.contains_key(&f.key()) {
                    return Err(Error::Precondition(format!(
                        "fan is not face closed: missing face of a {}-dim cone",
                        c.dim()
                    )));
                }
            }
        }
        for (i, a) in self.cones.iter().enumerate() {
            for b in self.cones.iter().skip(i + 1) {
                let m = a.intersect(b)?;
                if !m.is_face_of(a) || !m.is_face_of(b) {
                    return Err(Error::Precondition(
                        "two cones do not meet along a common face".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Cones that are not proper faces of another member.
    pub fn maximal_cones(&self) -> Vec<&RationalCone> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d.key() != c.key() && c.is_face_of(d)))
            .collect()
    }

    pub fn find(&self, cone: &RationalCone) -> Option<usize> {
        self.cones.iter().position(|c| c.key() == cone.key())
    }
}

fn dedup_push(cones: &mut BTreeMap<Vec<IVec>, RationalCone>, c: RationalCone) {
    cones.entry(c.key()).or_insert(c);
}

/// Decomposition of the window cone `pi` by a hyperplane arrangement: the
/// closures of the nonempty sign cells together with all their faces.
pub fn fan_from_hyperplanes(pi: &RationalCone, hyperplanes: &[IVec], form: &QMat) -> Result<Fan> {
    let n = pi.ambient;
    for h in hyperplanes {
        if h.len() != n {
            return Err(Error::DimensionMismatch("hyperplane functional length".into()));
        }
        if h.iter().all(|x| x.is_zero()) {
            return Err(Error::Precondition("zero hyperplane functional".into()));
        }
    }
    if hyperplanes.len() > 10 {
        return Err(Error::Unsupported(
            "fan_from_hyperplanes is guarded to at most 10 hyperplanes".into(),
        ));
    }
    let mut cells: BTreeMap<Vec<IVec>, RationalCone> = BTreeMap::new();
    let mut signs = vec![0i8; hyperplanes.len()];
    enumerate_sign_cells(pi, hyperplanes, 0, &mut signs, &mut cells)?;
    let mut all: BTreeMap<Vec<IVec>, RationalCone> = BTreeMap::new();
    for c in cells.into_values() {
        for f in c.faces() {
            dedup_push(&mut all, f);
        }
    }
    Ok(Fan { cones: all.into_values().collect(), form: form.clone() })
}

fn enumerate_sign_cells(
    pi: &RationalCone,
    hyperplanes: &[IVec],
    idx: usize,
    signs: &mut Vec<i8>,
    out: &mut BTreeMap<Vec<IVec>, RationalCone>,
) -> Result<()> {
    if idx == hyperplanes.len() {
        let mut ineqs: Vec<IVec> = Vec::new();
        for s in &pi.span_normals {
            ineqs.push(s.clone());
            ineqs.push(s.iter().map(|x| -x).collect());
        }
        ineqs.extend(pi.facets.iter().cloned());
        for (h, &s) in hyperplanes.iter().zip(signs.iter()) {
            match s {
                1 => ineqs.push(h.clone()),
                -1 => ineqs.push(h.iter().map(|x| -x).collect()),
                _ => {
                    ineqs.push(h.clone());
                    ineqs.push(h.iter().map(|x| -x).collect());
                }
            }
        }
        let cell = if ineqs.is_empty() {
            pi.clone()
        } else {
            RationalCone::from_inequalities(pi.ambient, &ineqs)?
        };
        // the open cell is nonempty iff a relative interior point of its
        // closure takes exactly the prescribed signs
        let p = cell.interior_point();
        let matches = hyperplanes.iter().zip(signs.iter()).all(|(h, &s)| {
            let v = dot_int(h, &p);
            match s {
                1 => v.is_positive(),
                -1 => v.is_negative(),
                _ => v.is_zero(),
            }
        });
        if matches {
            dedup_push(out, cell);
        }
        return Ok(());
    }
    for s in [1i8, -1, 0] {
        signs[idx] = s;
        enumerate_sign_cells(pi, hyperplanes, idx + 1, signs, out)?;
    }
    Ok(())
}

/// Decomposition of `pi` into the closures of the regions where the infimum
/// of the form-pairings with the given points is attained by a fixed point.
pub fn fan_from_points(pi: &RationalCone, form: &QMat, points: &[Vec<BigRational>]) -> Result<Fan> {
    let n = pi.ambient;
    if points.is_empty() {
        return Err(Error::Precondition("fan_from_points needs at least one point".into()));
    }
    // pairing functionals, deduplicated exactly
    let mut functionals: Vec<IVec> = Vec::new();
    let int = pi.interior_point();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch("point length".into()));
        }
        let w = form.mul_vec(p);
        let wi = clear_denominators(&w);
        if wi.iter().all(|x| x.is_zero()) {
            return Err(Error::Precondition("point pairs to zero with everything".into()));
        }
        if pi.rays.iter().any(|r| dot_int(&wi, r).is_negative())
            || !dot_int(&wi, &int).is_positive()
        {
            return Err(Error::Precondition(
                "point does not pair positively with the interior of pi".into(),
            ));
        }
        functionals.push(wi);
    }
    functionals.sort();
    functionals.dedup();
    let mut cells: BTreeMap<Vec<IVec>, RationalCone> = BTreeMap::new();
    let target_dim = pi.dim();
    for (j, wj) in functionals.iter().enumerate() {
        let mut ineqs: Vec<IVec> = Vec::new();
        for s in &pi.span_normals {
            ineqs.push(s.clone());
            ineqs.push(s.iter().map(|x| -x).collect());
        }
        ineqs.extend(pi.facets.iter().cloned());
        for (k, wk) in functionals.iter().enumerate() {
            if k != j {
                ineqs.push(wk.iter().zip(wj).map(|(a, b)| a - b).collect());
            }
        }
        let cell = if ineqs.is_empty() {
            pi.clone()
        } else {
            RationalCone::from_inequalities(n, &ineqs)?
        };
        if cell.dim() == target_dim {
            dedup_push(&mut cells, cell);
        }
    }
    let mut all: BTreeMap<Vec<IVec>, RationalCone> = BTreeMap::new();
    for c in cells.into_values() {
        for f in c.faces() {
            dedup_push(&mut all, f);
        }
    }
    Ok(Fan { cones: all.into_values().collect(), form: form.clone() })
}

/// Support space and isotropic center of a fan member.
#[derive(Debug, Clone)]
pub struct SupportSpaceReport {
    pub sigma_rays: Vec<IVec>,
    pub support_space: Vec<IVec>,
    pub isotropic_center: Vec<IVec>,
}

/// The support space of `sigma`: its linear span when it meets the open
/// positive cone of the form, and for an isotropic ray I the intersection of
/// I-perp with the hyperplanes through I.
pub fn support_space(
    fan: &Fan,
    sigma: &RationalCone,
    hyperplanes: &[IVec],
) -> Result<SupportSpaceReport> {
    if fan.find(sigma).is_none() {
        return Err(Error::Precondition("sigma is not a member of the fan".into()));
    }
    let n = sigma.ambient;
    let norm = |v: &IVec| -> BigRational {
        let vq = ivec_to_q(v);
        crate::mat::dot_rat(&vq, &fan.form.mul_vec(&vq))
    };
    for r in &sigma.rays {
        if norm(r).is_negative() {
            return Err(Error::Precondition(
                "cone has a negative-norm ray, so it is outside the closed positive cone".into(),
            ));
        }
    }
    let p = sigma.interior_point();
    let meets_c = !sigma.is_zero_cone() && norm(&p).is_positive();
    let support: Vec<IVec> = if meets_c || sigma.is_zero_cone() {
        span_of(&sigma.rays, n)
    } else {
        // isotropic ray: I-perp intersected with the hyperplanes through I
        let i = &sigma.rays[0];
        let gi = clear_denominators(&fan.form.mul_vec(&ivec_to_q(i)));
        let mut rows: Vec<IVec> = vec![gi];
        for h in hyperplanes {
            if dot_int(h, i).is_zero() {
                rows.push(h.clone());
            }
        }
        IMat::from_rows(rows).int_kernel()
    };
    let isotropic_center = isotropic_center_of(&support, &fan.form);
    // the center must be totally isotropic
    for a in &isotropic_center {
        for b in &isotropic_center {
            let v = crate::mat::dot_rat(&ivec_to_q(a), &fan.form.mul_vec(&ivec_to_q(b)));
            if !v.is_zero() {
                return Err(Error::Precondition(
                    "isotropic center is not totally isotropic".into(),
                ));
            }
        }
    }
    Ok(SupportSpaceReport {
        sigma_rays: sigma.rays.clone(),
        support_space: support,
        isotropic_center,
    })
}

fn span_of(vecs: &[IVec], n: usize) -> Vec<IVec> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let k1 = IMat::from_rows(vecs.to_vec()).int_kernel();
    if k1.is_empty() {
        return IMat::identity(n).to_rows();
    }
    IMat::from_rows(k1).int_kernel()
}

/// Basis of `V ∩ V^perp` for the subspace with the given basis.
fn isotropic_center_of(support: &[IVec], form: &QMat) -> Vec<IVec> {
    if support.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<IVec> =
        support.iter().map(|b| clear_denominators(&form.mul_vec(&ivec_to_q(b)))).collect();
    rows.extend(IMat::from_rows(support.to_vec()).int_kernel());
    IMat::from_rows(rows).int_kernel()
}

/// The subspace `J_H`: intersection of J-perp with the hyperplanes
/// containing the isotropic plane J.
pub fn plane_support_space(
    form: &QMat,
    j_basis: &[IVec],
    hyperplanes: &[IVec],
) -> Result<Vec<IVec>> {
    if j_basis.len() != 2 {
        return Err(Error::Precondition("J must have rank 2".into()));
    }
    let n = form.rows;
    for v in j_basis {
        if v.len() != n {
            return Err(Error::DimensionMismatch("J basis vector length".into()));
        }
    }
    if rank_of(&j_basis.to_vec()) != 2 {
        return Err(Error::Precondition("J basis is dependent".into()));
    }
    for a in j_basis {
        for b in j_basis {
            let v = crate::mat::dot_rat(&ivec_to_q(a), &form.mul_vec(&ivec_to_q(b)));
            if !v.is_zero() {
                return Err(Error::Precondition("J is not totally isotropic".into()));
            }
        }
    }
    let mut rows: Vec<IVec> =
        j_basis.iter().map(|b| clear_denominators(&form.mul_vec(&ivec_to_q(b)))).collect();
    for h in hyperplanes {
        if j_basis.iter().all(|b| dot_int(h, b).is_zero()) {
            rows.push(h.clone());
        }
    }
    Ok(IMat::from_rows(rows).int_kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{imat_from_i64, ivec_from_i64};

    fn quadrant2() -> RationalCone {
        RationalCone::from_rays(2, &[ivec_from_i64(&[1, 0]), ivec_from_i64(&[0, 1])]).unwrap()
    }

    fn form2(rows: &[&[i64]]) -> QMat {
        imat_from_i64(rows).to_rational()
    }

    #[test]
    fn hull_of_quadrant() {
        let c = quadrant2();
        assert_eq!(c.rays, vec![ivec_from_i64(&[0, 1]), ivec_from_i64(&[1, 0])]);
        assert_eq!(c.facets, vec![ivec_from_i64(&[0, 1]), ivec_from_i64(&[1, 0])]);
        assert!(c.span_normals.is_empty());
        assert!(c.contains(&ivec_from_i64(&[3, 5])));
        assert!(!c.contains(&ivec_from_i64(&[-1, 2])));
    }

    #[test]
    fn hull_of_tilted_cone() {
        // rays (1,1) and (1,-1): facets are x+y >= 0 and x-y >= 0
        let c =
            RationalCone::from_rays(2, &[ivec_from_i64(&[1, 1]), ivec_from_i64(&[1, -1])]).unwrap();
        assert_eq!(c.facets, vec![ivec_from_i64(&[1, -1]), ivec_from_i64(&[1, 1])]);
    }

    #[test]
    fn line_is_degenerate() {
        let r = RationalCone::from_rays(2, &[ivec_from_i64(&[1, 0]), ivec_from_i64(&[-1, 0])]);
        assert!(matches!(r, Err(Error::DegenerateCone)));
    }

    #[test]
    fn cut_matches_hull() {
        let c = RationalCone::from_inequalities(2, &[ivec_from_i64(&[1, 0]), ivec_from_i64(&[0, 1])])
            .unwrap();
        assert_eq!(c.key(), quadrant2().key());
        // a halfplane contains a line
        let h = RationalCone::from_inequalities(2, &[ivec_from_i64(&[1, 0])]);
        assert!(matches!(h, Err(Error::DegenerateCone)));
    }

    #[test]
    fn lower_dimensional_cone() {
        let c = RationalCone::from_rays(3, &[ivec_from_i64(&[1, 2, 0])]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.span_normals.len(), 2);
        assert_eq!(c.faces().len(), 2); // itself and the zero cone
    }

    #[test]
    fn faces_of_quadrant() {
        let fs = quadrant2().faces();
        assert_eq!(fs.len(), 4); // quadrant, two rays, origin
        let mut dims: Vec<usize> = fs.iter().map(|f| f.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 1, 1, 2]);
    }

    #[test]
    fn simplicial_cone_in_r3() {
        let c = RationalCone::from_rays(
            3,
            &[ivec_from_i64(&[1, 0, 0]), ivec_from_i64(&[0, 1, 0]), ivec_from_i64(&[0, 0, 1])],
        )
        .unwrap();
        assert_eq!(c.faces().len(), 8); // 1 + 3 + 3 + 1
        // a non-extreme generator is dropped
        let c2 = RationalCone::from_rays(
            3,
            &[
                ivec_from_i64(&[1, 0, 0]),
                ivec_from_i64(&[0, 1, 0]),
                ivec_from_i64(&[0, 0, 1]),
                ivec_from_i64(&[1, 1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(c2.key(), c.key());
    }

    #[test]
    fn fan_one_wall_in_quadrant() {
        let fan =
            fan_from_hyperplanes(&quadrant2(), &[ivec_from_i64(&[1, -1])], &form2(&[&[1, 0], &[0, 1]]))
                .unwrap();
        // two chambers, three rays, origin
        assert_eq!(fan.cones.len(), 6);
        fan.validate().unwrap();
        let chambers: Vec<_> = fan.cones.iter().filter(|c| c.dim() == 2).collect();
        assert_eq!(chambers.len(), 2);
        let rays: Vec<_> = fan.cones.iter().filter(|c| c.dim() == 1).collect();
        assert_eq!(rays.len(), 3);
    }

    #[test]
    fn fan_two_walls_in_quadrant() {
        let fan = fan_from_hyperplanes(
            &quadrant2(),
            &[ivec_from_i64(&[1, -1]), ivec_from_i64(&[1, -2])],
            &form2(&[&[1, 0], &[0, 1]]),
        )
        .unwrap();
        // 3 chambers, 4 rays, origin
        assert_eq!(fan.cones.len(), 8);
        fan.validate().unwrap();
        assert_eq!(fan.maximal_cones().len(), 3);
    }

    #[test]
    fn fan_empty_arrangement_is_face_fan() {
        let fan = fan_from_hyperplanes(&quadrant2(), &[], &form2(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(fan.cones.len(), 4);
        fan.validate().unwrap();
    }

    #[test]
    fn fan_from_points_splits_diagonal() {
        // hyperbolic form 2xy: pairing with (1,0) is y, with (0,1) is x
        let form = form2(&[&[0, 1], &[1, 0]]);
        let one = BigRational::from(BigInt::from(1));
        let zero = BigRational::from(BigInt::from(0));
        let pts = vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]];
        let fan = fan_from_points(&quadrant2(), &form, &pts).unwrap();
        fan.validate().unwrap();
        assert_eq!(fan.maximal_cones().len(), 2);
        // the diagonal is a wall
        assert!(fan.cones.iter().any(|c| c.rays == vec![ivec_from_i64(&[1, 1])]));
        // a single point gives the face fan of pi
        let fan1 = fan_from_points(&quadrant2(), &form, &pts[..1].to_vec()).unwrap();
        assert_eq!(fan1.maximal_cones().len(), 1);
        // duplicated points change nothing
        let dup = vec![pts[0].clone(), pts[0].clone(), pts[1].clone()];
        let fan2 = fan_from_points(&quadrant2(), &form, &dup).unwrap();
        assert_eq!(fan2.cones.len(), fan.cones.len());
    }

    #[test]
    fn support_space_of_isotropic_ray() {
        // rank-3 form 2xy - 2z^2 on a 3-dimensional window
        let form = form2(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -2]]);
        let pi = RationalCone::from_rays(
            3,
            &[
                ivec_from_i64(&[1, 0, 0]),
                ivec_from_i64(&[0, 1, 0]),
                ivec_from_i64(&[1, 1, 1]),
                ivec_from_i64(&[1, 1, -1]),
            ],
        )
        .unwrap();
        let fan = fan_from_hyperplanes(&pi, &[], &form).unwrap();
        let i = RationalCone::from_rays(3, &[ivec_from_i64(&[1, 0, 0])]).unwrap();
        let rep = support_space(&fan, &i, &[]).unwrap();
        // I-perp = {y = 0}
        assert_eq!(rep.support_space.len(), 2);
        for v in &rep.support_space {
            assert!(v[1].is_zero());
        }
        assert_eq!(rep.isotropic_center, vec![ivec_from_i64(&[1, 0, 0])]);

        // with the hyperplane z = 0 through I the support shrinks to span(I)
        let fan2 = fan_from_hyperplanes(&pi, &[ivec_from_i64(&[0, 0, 1])], &form).unwrap();
        let rep2 = support_space(&fan2, &i, &[ivec_from_i64(&[0, 0, 1])]).unwrap();
        assert_eq!(rep2.support_space, vec![ivec_from_i64(&[1, 0, 0])]);
        assert_eq!(rep2.isotropic_center, vec![ivec_from_i64(&[1, 0, 0])]);
    }

    #[test]
    fn support_space_of_chamber_is_span() {
        let form = form2(&[&[0, 1], &[1, 0]]);
        let pi = quadrant2();
        let fan = fan_from_hyperplanes(&pi, &[], &form).unwrap();
        let rep = support_space(&fan, &pi, &[]).unwrap();
        assert_eq!(rep.support_space.len(), 2);
        assert!(rep.isotropic_center.is_empty());
        // a cone outside the fan errors
        let alien = RationalCone::from_rays(2, &[ivec_from_i64(&[2, 1])]).unwrap();
        assert!(support_space(&fan, &alien, &[]).is_err());
    }

    #[test]
    fn plane_support_space_cases() {
        // U + U: J = span(e1, e2) with basis order (e1,f1,e2,f2)
        let g = imat_from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]])
            .to_rational();
        let j = vec![ivec_from_i64(&[1, 0, 0, 0]), ivec_from_i64(&[0, 0, 1, 0])];
        // no hyperplane contains J: J_H = J-perp (kills f1, f2 directions)
        let s = plane_support_space(&g, &j, &[]).unwrap();
        assert_eq!(s.len(), 2);
        for v in &s {
            assert!(v[1].is_zero() && v[3].is_zero());
        }
        // hyperplanes cutting J-perp down to J
        let hs = vec![ivec_from_i64(&[0, 1, 0, 0]), ivec_from_i64(&[0, 0, 0, 1])];
        let s2 = plane_support_space(&g, &j, &hs).unwrap();
        assert_eq!(IMat::from_rows(s2).rank(), 2);
        // non-isotropic J is rejected
        let bad = vec![ivec_from_i64(&[1, 1, 0, 0]), ivec_from_i64(&[0, 0, 1, 0])];
        assert!(plane_support_space(&g, &bad, &[]).is_err());
    }

    #[test]
    fn intersection_is_common_face() {
        let c1 =
            RationalCone::from_rays(2, &[ivec_from_i64(&[1, 0]), ivec_from_i64(&[1, 1])]).unwrap();
        let c2 =
            RationalCone::from_rays(2, &[ivec_from_i64(&[1, 1]), ivec_from_i64(&[0, 1])]).unwrap();
        let m = c1.intersect(&c2).unwrap();
        assert_eq!(m.rays, vec![ivec_from_i64(&[1, 1])]);
        assert!(m.is_face_of(&c1) && m.is_face_of(&c2));
    }
}
