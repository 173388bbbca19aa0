//! Classification of the (-2)-vectors of a negative definite even lattice
//! into irreducible root systems of type A, D or E.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeSet;

use crate::enumeration::{short_vectors, VectorQuery};
use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::mat::{canonical_sign, IMat, IVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeType {
    A(usize),
    D(usize),
    E(usize),
}

impl AdeType {
    pub fn rank(&self) -> usize {
        match *self {
            AdeType::A(n) | AdeType::D(n) | AdeType::E(n) => n,
        }
    }

    /// Number of roots of the classical irreducible system.
    pub fn root_count(&self) -> usize {
        match *self {
            AdeType::A(n) => n * (n + 1),
            AdeType::D(n) => 2 * n * (n - 1),
            AdeType::E(6) => 72,
            AdeType::E(7) => 126,
            AdeType::E(8) => 240,
            AdeType::E(_) => unreachable!("E rank outside 6..8"),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            AdeType::A(n) => format!("A{}", n),
            AdeType::D(n) => format!("D{}", n),
            AdeType::E(n) => format!("E{}", n),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootComponent {
    pub ade: AdeType,
    /// Canonically ordered simple roots; their Gram is exactly the negated
    /// Cartan matrix of `ade`.
    pub simple_roots: Vec<IVec>,
    /// All roots of the component as canonical sign classes, sorted.
    pub sign_classes: Vec<IVec>,
}

#[derive(Debug, Clone)]
pub struct RootDecomposition {
    pub components: Vec<RootComponent>,
    pub total_root_span_rank: usize,
    pub ambient_rank: usize,
}

impl RootDecomposition {
    pub fn corank(&self) -> usize {
        self.ambient_rank - self.total_root_span_rank
    }
}

/// Decompose the norm (-2) vectors of a negative definite even lattice into
/// irreducible ADE components with recognized types and canonical simple
/// root bases.
pub fn ade_decompose(l: &IntLattice) -> Result<RootDecomposition> {
    let n = l.rank();
    let sig = l.signature();
    if sig.negative != n {
        return Err(Error::NotDefinite("ade_decompose needs a negative definite lattice".into()));
    }
    if !l.is_even() {
        return Err(Error::Precondition("ade_decompose needs an even lattice".into()));
    }
    let classes = short_vectors(l, &VectorQuery::norm(BigInt::from(-2)))?;
    let m = classes.len();
    // connected components of the nonzero-pairing graph on sign classes
    let mut comp = vec![usize::MAX; m];
    let mut next = 0usize;
    for start in 0..m {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(i) = stack.pop() {
            for j in 0..m {
                if comp[j] == usize::MAX && !l.inner(&classes[i], &classes[j])?.is_zero() {
                    comp[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    let mut components = Vec::new();
    for c in 0..next {
        let cls: Vec<IVec> =
            (0..m).filter(|&i| comp[i] == c).map(|i| classes[i].clone()).collect();
        components.push(recognize_component(l, cls)?);
    }
    components.sort_by(|a, b| a.ade.cmp(&b.ade).then_with(|| a.simple_roots.cmp(&b.simple_roots)));
    let span_rank = if classes.is_empty() { 0 } else { IMat::from_rows(classes).rank() };
    Ok(RootDecomposition { components, total_root_span_rank: span_rank, ambient_rank: n })
}

fn recognize_component(l: &IntLattice, sign_classes: Vec<IVec>) -> Result<RootComponent> {
    // lexicographically positive roots form a positive system; its
    // indecomposable elements are the simple roots
    let positive: BTreeSet<IVec> = sign_classes.iter().cloned().collect();
    let mut simple: Vec<IVec> = Vec::new();
    for r in &positive {
        let decomposable = positive.iter().any(|s| {
            if s == r {
                return false;
            }
            let diff: IVec = r.iter().zip(s).map(|(a, b)| a - b).collect();
            match diff.iter().find(|x| !x.is_zero()) {
                Some(first) if first > &&BigInt::zero() => positive.contains(&diff),
                _ => false,
            }
        });
        if !decomposable {
            simple.push(r.clone());
        }
    }
    let k = simple.len();
    let span_rank = IMat::from_rows(sign_classes.clone()).rank();
    if k != span_rank {
        return Err(Error::Precondition(format!(
            "simple root extraction found {} roots for a rank-{} component",
            k, span_rank
        )));
    }
    let (ade, ordered) = recognize_diagram(l, simple)?;
    // the classical root count certifies the recognition
    if ade.root_count() != 2 * sign_classes.len() {
        return Err(Error::Precondition(format!(
            "component recognized as {} but has {} roots",
            ade.name(),
            2 * sign_classes.len()
        )));
    }
    // simple-root Gram must be exactly the negated Cartan matrix
    let got = l.sublattice_gram(&ordered)?;
    let want = negated_cartan(ade);
    if got != want {
        return Err(Error::Precondition(format!(
            "simple-root Gram does not match the {} Cartan matrix",
            ade.name()
        )));
    }
    Ok(RootComponent { ade, simple_roots: ordered, sign_classes })
}

/// Negated Cartan matrix of an ADE type in the canonical node order used by
/// this crate: A = chain; D = (prong, prong, chain...); E = (center, short
/// arm, middle arm, long arm).
pub fn negated_cartan(ade: AdeType) -> IMat {
    let l = match ade {
        AdeType::A(n) => crate::lattice::make_standard(crate::lattice::StandardLattice::A(n), -1),
        AdeType::D(n) => crate::lattice::make_standard(crate::lattice::StandardLattice::D(n), -1),
        AdeType::E(n) => crate::lattice::make_standard(crate::lattice::StandardLattice::E(n), -1),
    };
    l.expect("valid ADE type").gram
}

/// Recognize the Dynkin type of a simple-root set from its diagram shape and
/// return the roots in canonical node order.
fn recognize_diagram(l: &IntLattice, simple: Vec<IVec>) -> Result<(AdeType, Vec<IVec>)> {
    let k = simple.len();
    let adj = |i: usize, j: usize| -> bool {
        !l.inner(&simple[i], &simple[j]).expect("rank checked").is_zero()
    };
    let degree: Vec<usize> =
        (0..k).map(|i| (0..k).filter(|&j| j != i && adj(i, j)).count()).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    if max_deg <= 2 {
        // path: order from the lexicographically smaller endpoint
        if k == 1 {
            return Ok((AdeType::A(1), simple));
        }
        let ends: Vec<usize> = (0..k).filter(|&i| degree[i] == 1).collect();
        if ends.len() != 2 {
            return Err(Error::Precondition("root diagram is not a path".into()));
        }
        let start = if simple[ends[0]] <= simple[ends[1]] { ends[0] } else { ends[1] };
        let order = walk_path(start, k, &adj);
        let ordered: Vec<IVec> = order.into_iter().map(|i| simple[i].clone()).collect();
        return Ok((AdeType::A(k), ordered));
    }
    if max_deg == 3 && degree.iter().filter(|&&d| d == 3).count() == 1 {
        let center = degree.iter().position(|&d| d == 3).unwrap();
        let mut branches: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            if i != center && adj(center, i) {
                // walk outward from the center
                let mut branch = vec![i];
                let mut prev = center;
                let mut cur = i;
                loop {
                    let nexts: Vec<usize> =
                        (0..k).filter(|&j| j != prev && j != cur && adj(cur, j)).collect();
                    match nexts.len() {
                        0 => break,
                        1 => {
                            branch.push(nexts[0]);
                            prev = cur;
                            cur = nexts[0];
                        }
                        _ => return Err(Error::Precondition("branch is not a path".into())),
                    }
                }
                branches.push(branch);
            }
        }
        if branches.len() != 3 || branches.iter().map(|b| b.len()).sum::<usize>() + 1 != k {
            return Err(Error::Precondition("diagram is not a T-shape".into()));
        }
        branches
            .sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| simple[a[0]].cmp(&simple[b[0]])));
        let lens = (branches[0].len(), branches[1].len(), branches[2].len());
        match lens {
            (1, 1, _) => {
                // D_k in (prong, prong, trivalent, chain...) order
                let mut order = vec![branches[0][0], branches[1][0], center];
                order.extend(branches[2].iter().copied());
                let ordered: Vec<IVec> = order.into_iter().map(|i| simple[i].clone()).collect();
                Ok((AdeType::D(k), ordered))
            }
            (1, 2, q) if (2..=4).contains(&q) => {
                // E_k in (center, arms ascending) order
                let mut order = vec![center];
                for b in &branches {
                    order.extend(b.iter().copied());
                }
                let ordered: Vec<IVec> = order.into_iter().map(|i| simple[i].clone()).collect();
                Ok((AdeType::E(k), ordered))
            }
            _ => Err(Error::Precondition("T-shape is not of ADE type".into())),
        }
    } else {
        Err(Error::Precondition("diagram shape is not ADE".into()))
    }
}

fn walk_path(start: usize, k: usize, adj: &dyn Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < k {
        let next =
            (0..k).find(|&j| j != cur && j != prev && adj(cur, j)).expect("path is connected");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Rank of the ambient lattice minus the rank of the span of its roots.
pub fn root_span_corank(l: &IntLattice) -> Result<usize> {
    let n = l.rank();
    let sig = l.signature();
    if sig.negative != n {
        return Err(Error::NotDefinite(
            "root_span_corank needs a negative definite lattice".into(),
        ));
    }
    let classes = short_vectors(l, &VectorQuery::norm(BigInt::from(-2)))?;
    let span = if classes.is_empty() { 0 } else { IMat::from_rows(classes).rank() };
    Ok(n - span)
}

/// Type of the unique component containing all the given roots; errors when
/// they spread over several components or are not roots.
pub fn containing_component_type(decomp: &RootDecomposition, roots: &[IVec]) -> Result<AdeType> {
    if roots.is_empty() {
        return Err(Error::Precondition("no roots given".into()));
    }
    let mut found: Option<usize> = None;
    for r in roots {
        let c = canonical_sign(r);
        let idx = decomp
            .components
            .iter()
            .position(|comp| comp.sign_classes.binary_search(&c).is_ok())
            .ok_or_else(|| Error::Precondition("vector is not a root of the lattice".into()))?;
        match found {
            None => found = Some(idx),
            Some(prev) if prev != idx => {
                return Err(Error::Precondition("roots spread over multiple components".into()))
            }
            _ => {}
        }
    }
    Ok(decomp.components[found.unwrap()].ade)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_standard, StandardLattice};
    use crate::mat::ivec_from_i64;
    use num_traits::Signed;

    fn std_neg(k: StandardLattice) -> IntLattice {
        make_standard(k, -1).unwrap()
    }

    #[test]
    fn e8_is_one_component() {
        let d = ade_decompose(&std_neg(StandardLattice::E(8))).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].ade, AdeType::E(8));
        assert_eq!(d.total_root_span_rank, 8);
        assert_eq!(d.corank(), 0);
        assert_eq!(d.components[0].sign_classes.len(), 120);
    }

    #[test]
    fn a1_plus_a1() {
        let l = std_neg(StandardLattice::A(1)).direct_sum(&std_neg(StandardLattice::A(1)));
        let d = ade_decompose(&l).unwrap();
        let types: Vec<AdeType> = d.components.iter().map(|c| c.ade).collect();
        assert_eq!(types, vec![AdeType::A(1), AdeType::A(1)]);
    }

    #[test]
    fn d4_trivalent_node() {
        let d = ade_decompose(&std_neg(StandardLattice::D(4))).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].ade, AdeType::D(4));
        assert_eq!(d.components[0].sign_classes.len(), 12); // 24 roots
    }

    #[test]
    fn further_types_recognized() {
        for (l, t) in [
            (std_neg(StandardLattice::A(3)), AdeType::A(3)),
            (std_neg(StandardLattice::E(6)), AdeType::E(6)),
            (std_neg(StandardLattice::E(7)), AdeType::E(7)),
            (std_neg(StandardLattice::D(5)), AdeType::D(5)),
        ] {
            let d = ade_decompose(&l).unwrap();
            assert_eq!(d.components.len(), 1);
            assert_eq!(d.components[0].ade, t);
        }
    }

    #[test]
    fn decomposition_is_basis_order_independent() {
        // permuting the basis must not change the multiset of types
        let l = std_neg(StandardLattice::A(2)).direct_sum(&std_neg(StandardLattice::D(4)));
        let n = l.rank();
        let mut p = IMat::zero(n, n);
        for i in 0..n {
            p[(i, (i * 5 + 3) % n)] = BigInt::from(1);
        }
        assert_eq!(p.det().abs(), BigInt::from(1));
        let conj = p.transpose().mul(&l.gram).mul(&p);
        let l2 = IntLattice::new(conj, None).unwrap();
        let t1: Vec<AdeType> =
            ade_decompose(&l).unwrap().components.iter().map(|c| c.ade).collect();
        let t2: Vec<AdeType> =
            ade_decompose(&l2).unwrap().components.iter().map(|c| c.ade).collect();
        assert_eq!(t1, t2);
    }

    #[test]
    fn corank_examples() {
        let e8m = std_neg(StandardLattice::E(8));
        assert_eq!(root_span_corank(&e8m).unwrap(), 0);
        let i4 = make_standard(StandardLattice::I(BigInt::from(-4)), 1).unwrap();
        assert_eq!(root_span_corank(&i4).unwrap(), 1);
        // the quotient lattice of the K3 computation at g = 3
        let q = e8m.direct_sum(&e8m).direct_sum(&i4);
        assert_eq!(root_span_corank(&q).unwrap(), 1);
    }

    #[test]
    fn containing_component_examples() {
        let l = std_neg(StandardLattice::A(1)).direct_sum(&std_neg(StandardLattice::A(1)));
        let d = ade_decompose(&l).unwrap();
        let t = containing_component_type(&d, &[ivec_from_i64(&[1, 0])]).unwrap();
        assert_eq!(t, AdeType::A(1));
        assert!(containing_component_type(&d, &[ivec_from_i64(&[1, 0]), ivec_from_i64(&[0, 1])])
            .is_err());

        let e8m = std_neg(StandardLattice::E(8));
        let d = ade_decompose(&e8m).unwrap();
        let t = containing_component_type(&d, &d.components[0].simple_roots).unwrap();
        assert_eq!(t, AdeType::E(8));
    }

    #[test]
    fn affine_e6_configuration_inside_e7() {
        // E6 simple roots inside E7 plus the negated highest E6 root: the
        // seven vectors realize the affine E6 diagram and lie in the E7
        // component
        let e7m = std_neg(StandardLattice::E(7));
        let d = ade_decompose(&e7m).unwrap();
        let simple = &d.components[0].simple_roots;
        // node order is (center, short arm, middle arm x2, long arm x3); the
        // E6 subdiagram drops the last long-arm node
        let e6: Vec<IVec> = simple[..6].to_vec();
        // highest root of that E6: marks (center 3, short 2, middle 2,1, long 2,1)
        let marks = [3i64, 2, 2, 1, 2, 1];
        let mut theta = vec![BigInt::zero(); 7];
        for (m, r) in marks.iter().zip(&e6) {
            for (t, c) in theta.iter_mut().zip(r) {
                *t += BigInt::from(*m) * c;
            }
        }
        assert_eq!(e7m.norm(&theta).unwrap(), BigInt::from(-2));
        let affine: IVec = theta.iter().map(|c| -c).collect();
        let mut config = e6.clone();
        config.push(affine.clone());
        let g = e7m.sublattice_gram(&config).unwrap();
        assert_eq!(g[(6, 6)], BigInt::from(-2));
        let t = containing_component_type(&d, &config).unwrap();
        assert_eq!(t, AdeType::E(7));
    }

    #[test]
    fn rejects_wrong_signature() {
        let u = make_standard(StandardLattice::U, 1).unwrap();
        assert!(ade_decompose(&u).is_err());
        let e8 = make_standard(StandardLattice::E(8), 1).unwrap();
        assert!(ade_decompose(&e8).is_err());
    }
}
