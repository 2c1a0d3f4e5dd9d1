//! Sylow and Hall machinery, and enumeration of the subgroups of order p^d
//! that the complementation predicates quantify over.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::fp::{is_prime, FpMatrix};
use crate::group::{ElemId, FiniteGroup};
use crate::lattice::{subgroups_up_to_conjugacy, normalizer_members, OrderFilter};
use crate::subgroup::{
    closure, conjugate_orbit, subgroup_as_group, SubgroupHandle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub d: u32,
    pub value: u64,
}

impl PrimePower {
    pub fn new(p: u64, d: u32) -> Result<PrimePower> {
        if !is_prime(p) {
            return Err(Error::BadParameters(format!("{p} is not prime")));
        }
        let value = p
            .checked_pow(d)
            .ok_or_else(|| Error::BadParameters(format!("{p}^{d} overflows")))?;
        Ok(PrimePower { p, d, value })
    }
}

/// Largest power of p dividing m.
pub fn p_part(m: u64, p: u64) -> Result<PrimePower> {
    if !is_prime(p) {
        return Err(Error::BadParameters(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::BadParameters("p-part of 0 is undefined".into()));
    }
    let mut d = 0u32;
    let mut m = m;
    while m % p == 0 {
        m /= p;
        d += 1;
    }
    PrimePower::new(p, d)
}

/// A Sylow p-subgroup: grow a cyclic p-subgroup by p-elements of its
/// normalizer until the full p-part is reached. `seed` permutes the
/// candidate order; any seed yields a conjugate result.
pub fn sylow_p_seeded(g: &FiniteGroup, p: u64, seed: Option<u64>) -> Result<SubgroupHandle> {
    if !is_prime(p) {
        return Err(Error::BadParameters(format!("{p} is not prime")));
    }
    let vp = g.p_valuation(p);
    let target = p.pow(vp);
    let mut scan: Vec<ElemId> = g.elements().collect();
    if let Some(s) = seed {
        let mut rng = rand::rngs::StdRng::seed_from_u64(s);
        scan.shuffle(&mut rng);
    }
    if vp == 0 {
        return Ok(crate::subgroup::trivial_subgroup(g));
    }
    // seed element: p-part of the first element of order divisible by p
    let seed_elem = scan
        .iter()
        .copied()
        .find_map(|x| {
            let ord = g.element_order(x);
            if ord % p == 0 {
                let mut pp = 1u64;
                let mut rest = ord;
                while rest % p == 0 {
                    rest /= p;
                    pp *= p;
                }
                Some(g.power(x, ord / pp))
            } else {
                None
            }
        })
        .expect("Cauchy: an element of order divisible by p exists");
    let mut sub = closure(g, &[seed_elem]);
    while sub.order() < target {
        let nz = normalizer_members(g, &sub);
        let next = scan
            .iter()
            .copied()
            .find(|&y| {
                if sub.contains(y) || !nz.binary_search(&y).is_ok() {
                    return false;
                }
                let mut ord = g.element_order(y);
                while ord % p == 0 {
                    ord /= p;
                }
                ord == 1
            })
            .expect("a p-subgroup below the Sylow order has a p-element beyond it in its normalizer");
        let mut gens = sub.generators.clone();
        gens.push(next);
        sub = closure(g, &gens);
    }
    Ok(sub)
}

pub fn sylow_p(g: &FiniteGroup, p: u64) -> Result<SubgroupHandle> {
    sylow_p_seeded(g, p, None)
}

/// Is the subgroup an elementary abelian p-group (every non-identity
/// element of order p, abelian)? The trivial subgroup qualifies.
pub fn is_elementary_abelian(g: &FiniteGroup, h: &SubgroupHandle, p: u64) -> bool {
    if !crate::subgroup::is_abelian_subgroup(g, h) {
        return false;
    }
    h.members.iter().all(|&m| m == 0 || g.element_order(m) == p)
}

/// Coordinates of an elementary abelian subgroup as F_p^k: a basis of
/// element ids and both direction maps.
pub struct EaCoords {
    pub p: u64,
    pub dim: usize,
    pub basis: Vec<ElemId>,
    pub coord_of: HashMap<ElemId, Vec<u64>>,
    pub elem_of: HashMap<Vec<u64>, ElemId>,
}

pub fn ea_coordinates(g: &FiniteGroup, h: &SubgroupHandle, p: u64) -> EaCoords {
    debug_assert!(is_elementary_abelian(g, h, p));
    let mut basis: Vec<ElemId> = Vec::new();
    let mut coord_of: HashMap<ElemId, Vec<u64>> = HashMap::new();
    let mut elem_of: HashMap<Vec<u64>, ElemId> = HashMap::new();
    coord_of.insert(0, Vec::new());
    elem_of.insert(Vec::new(), 0);
    for &m in &h.members {
        if coord_of.contains_key(&m) {
            continue;
        }
        // extend every known element by powers of the new basis vector
        let known: Vec<(ElemId, Vec<u64>)> =
            coord_of.iter().map(|(k, v)| (*k, v.clone())).collect();
        basis.push(m);
        for (e, c) in known {
            let mut acc = e;
            for k in 1..p {
                acc = g.mul(acc, m);
                let mut cc = c.clone();
                cc.push(k);
                coord_of.insert(acc, cc.clone());
                elem_of.insert(cc, acc);
            }
            let mut c0 = c.clone();
            c0.push(0);
            let old = coord_of.get_mut(&e).unwrap();
            *old = c0.clone();
            elem_of.insert(c0, e);
            elem_of.remove(&c);
        }
    }
    let dim = basis.len();
    // pad all coordinates to full length
    let coord_of: HashMap<ElemId, Vec<u64>> = coord_of
        .into_iter()
        .map(|(e, mut c)| {
            c.resize(dim, 0);
            (e, c)
        })
        .collect();
    let elem_of: HashMap<Vec<u64>, ElemId> =
        coord_of.iter().map(|(e, c)| (c.clone(), *e)).collect();
    EaCoords { p, dim, basis, coord_of, elem_of }
}

/// All RREF matrices of rank `d` with `k` columns over F_p, enumerated
/// deterministically. Each is a canonical basis of a d-dimensional subspace.
fn all_rref_bases(p: u64, k: usize, d: usize) -> Vec<FpMatrix> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    choose_pivots(p, k, d, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(
    p: u64,
    k: usize,
    d: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<FpMatrix>,
) {
    if pivots.len() == d {
        // free positions: row r, column c with c > pivots[r], c not a pivot
        // of any row, and c < pivots[r'] implies filled only when allowed by
        // RREF shape: entries right of the pivot, excluding pivot columns.
        let mut free_pos = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in (pc + 1)..k {
                if !pivots.contains(&c) {
                    free_pos.push((r, c));
                }
            }
        }
        let total = (p as u128).pow(free_pos.len() as u32);
        for mut ix in 0..total {
            let mut m = FpMatrix::zeros(p, d, k);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, 1);
            }
            for &(r, c) in &free_pos {
                m.set(r, c, (ix % p as u128) as u64);
                ix /= p as u128;
            }
            out.push(m);
        }
        return;
    }
    for c in start..k {
        if k - c < d - pivots.len() {
            break;
        }
        pivots.push(c);
        choose_pivots(p, k, d, c + 1, pivots, out);
        pivots.pop();
    }
}

/// One representative per G-conjugacy class of subgroups of order p^d.
/// All p-subgroups lie in a Sylow conjugate, so candidates are enumerated
/// inside one fixed Sylow subgroup and then fused under G-conjugacy.
pub fn subgroups_of_order_pd(g: &FiniteGroup, pp: PrimePower) -> Result<Vec<SubgroupHandle>> {
    g.caps().check_lattice(g.order())?;
    let gp = p_part(g.order(), pp.p)?;
    if pp.value > gp.value {
        return Err(Error::BadParameters(format!(
            "p^d = {} exceeds |G|_p = {}",
            pp.value, gp.value
        )));
    }
    if pp.d == 0 {
        return Ok(vec![crate::subgroup::trivial_subgroup(g)]);
    }
    let syl = sylow_p(g, pp.p)?;
    let candidates: Vec<Vec<ElemId>> = if is_elementary_abelian(g, &syl, pp.p) {
        let coords = ea_coordinates(g, &syl, pp.p);
        let mut sets = Vec::new();
        for basis in all_rref_bases(pp.p, coords.dim, pp.d as usize) {
            let mut members = Vec::with_capacity(pp.value as usize);
            for cvec in crate::fp::all_vectors(pp.p, pp.d as usize) {
                let v = basis.apply_row(&cvec);
                members.push(coords.elem_of[&v]);
            }
            members.sort_unstable();
            sets.push(members);
        }
        sets
    } else {
        let psub = subgroup_as_group(g, &syl);
        let lat = subgroups_up_to_conjugacy(&psub, OrderFilter::DividesAnyOf(vec![pp.value]))?;
        let mut sets = HashSet::new();
        for class in lat.classes.iter().filter(|c| c.order() == pp.value) {
            for set in &class.orbit {
                let mapped: Vec<ElemId> = {
                    let mut v: Vec<ElemId> =
                        set.iter().map(|&m| psub.sub_to_parent(m).unwrap()).collect();
                    v.sort_unstable();
                    v
                };
                sets.insert(mapped);
            }
        }
        let mut sets: Vec<Vec<ElemId>> = sets.into_iter().collect();
        sets.sort();
        sets
    };
    // fuse under G-conjugacy
    let mut reps: Vec<SubgroupHandle> = Vec::new();
    let mut seen: HashSet<Vec<ElemId>> = HashSet::new();
    for members in candidates {
        if seen.contains(&members) {
            continue;
        }
        let orbit = conjugate_orbit(g, &members);
        let rep = SubgroupHandle::from_members(g, orbit[0].clone());
        for set in orbit {
            seen.insert(set);
        }
        reps.push(rep);
    }
    reps.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(reps)
}

/// A subgroup of order |G| / |G|_p if one exists.
pub fn hall_pprime_complement(g: &FiniteGroup, p: u64) -> Result<Option<SubgroupHandle>> {
    let gp = p_part(g.order(), p)?;
    let m = g.order() / gp.value;
    crate::complement::find_subgroup_of_order(g, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;

    fn perm(degree: usize, gens: &[Vec<u16>]) -> FiniteGroup {
        FiniteGroup::from_permutations(degree, gens, Caps::default()).unwrap()
    }

    fn c6() -> FiniteGroup {
        perm(6, &[vec![1, 2, 3, 4, 5, 0]])
    }

    #[test]
    fn p_part_values() {
        assert_eq!(p_part(1, 7).unwrap().value, 1);
        let pp = p_part(168, 2).unwrap();
        assert_eq!((pp.d, pp.value), (3, 8));
        let pp = p_part(7920, 11).unwrap();
        assert_eq!((pp.d, pp.value), (1, 11));
    }

    #[test]
    fn prime_validation() {
        assert!(p_part(12, 4).is_err());
        assert!(PrimePower::new(6, 2).is_err());
    }

    #[test]
    fn sylow_of_c6() {
        let g = c6();
        let p3 = sylow_p(&g, 3).unwrap();
        assert_eq!(p3.order(), 3);
        let p2 = sylow_p(&g, 2).unwrap();
        assert_eq!(p2.order(), 2);
        // p not dividing order: trivial
        let p5 = sylow_p(&g, 5).unwrap();
        assert_eq!(p5.order(), 1);
    }

    #[test]
    fn sylow_order_matches_p_part_on_s4() {
        let g = perm(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]);
        assert_eq!(g.order(), 24);
        for p in [2u64, 3] {
            let syl = sylow_p(&g, p).unwrap();
            assert_eq!(syl.order(), p_part(24, p).unwrap().value);
        }
    }

    #[test]
    fn seeded_sylows_are_conjugate() {
        let g = perm(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]);
        let a = sylow_p_seeded(&g, 2, Some(1)).unwrap();
        let b = sylow_p_seeded(&g, 2, Some(42)).unwrap();
        assert_eq!(a.order(), b.order());
        let orbit = conjugate_orbit(&g, &a.members);
        assert!(orbit.binary_search_by(|s| s.as_slice().cmp(&b.members)).is_ok());
    }

    #[test]
    fn elementary_abelian_checks() {
        let g = c6();
        let p3 = sylow_p(&g, 3).unwrap();
        assert!(is_elementary_abelian(&g, &p3, 3));
        assert!(is_elementary_abelian(&g, &crate::subgroup::trivial_subgroup(&g), 3));
        let c4 = perm(4, &[vec![1, 2, 3, 0]]);
        let h = crate::subgroup::full_subgroup(&c4);
        assert!(!is_elementary_abelian(&c4, &h, 2));
    }

    #[test]
    fn ea_coordinates_of_v4() {
        let g = perm(4, &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]]);
        let h = crate::subgroup::full_subgroup(&g);
        let coords = ea_coordinates(&g, &h, 2);
        assert_eq!(coords.dim, 2);
        assert_eq!(coords.coord_of.len(), 4);
        // round trip
        for (&e, c) in &coords.coord_of {
            assert_eq!(coords.elem_of[c], e);
        }
    }

    #[test]
    fn rref_bases_count_gaussian() {
        // [4 choose 2]_2 = 35
        assert_eq!(all_rref_bases(2, 4, 2).len(), 35);
        // [3 choose 1]_3 = 13
        assert_eq!(all_rref_bases(3, 3, 1).len(), 13);
        assert_eq!(all_rref_bases(2, 3, 0).len(), 1);
    }

    #[test]
    fn order_pd_trivial_class() {
        let g = c6();
        let reps = subgroups_of_order_pd(&g, PrimePower::new(3, 0).unwrap()).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].order(), 1);
    }

    #[test]
    fn order_four_subgroups_of_d8() {
        let g = perm(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]]);
        assert_eq!(g.order(), 8);
        let reps = subgroups_of_order_pd(&g, PrimePower::new(2, 2).unwrap()).unwrap();
        // 3 subgroups in 3 classes (2 Klein, 1 cyclic)
        assert_eq!(reps.len(), 3);
        let cyclic = reps
            .iter()
            .filter(|h| crate::subgroup::is_cyclic_subgroup(&g, h))
            .count();
        assert_eq!(cyclic, 1);
    }

    #[test]
    fn hall_complement_of_c6() {
        let g = c6();
        let hall = hall_pprime_complement(&g, 2).unwrap().unwrap();
        assert_eq!(hall.order(), 3);
    }

    #[test]
    fn hall_complement_of_a4_at_3() {
        let g = perm(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]);
        let hall = hall_pprime_complement(&g, 3).unwrap().unwrap();
        assert_eq!(hall.order(), 4);
    }
}
