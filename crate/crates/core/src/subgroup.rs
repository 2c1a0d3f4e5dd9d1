//! Subgroup handles and normal-structure computations.
//!
//! A subgroup is canonically represented by its sorted member-id set, so
//! subgroup equality is member-set equality. Generators are kept alongside
//! for cheap reconstruction and serialization.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{ElemId, FiniteGroup};

#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    /// Sorted, closed under multiplication and inverse, contains 0.
    pub members: Vec<ElemId>,
    pub generators: Vec<ElemId>,
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for SubgroupHandle {}

impl std::hash::Hash for SubgroupHandle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl SubgroupHandle {
    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, e: ElemId) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn from_members(g: &FiniteGroup, members: Vec<ElemId>) -> SubgroupHandle {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let generators = canonical_generators(g, &members);
        SubgroupHandle { members, generators }
    }
}

/// Closure of a set of element ids as a sorted member vector. Returns None
/// if the closure grows past `cap` elements.
pub fn closure_members_capped(
    g: &FiniteGroup,
    gens: &[ElemId],
    cap: u64,
) -> Option<Vec<ElemId>> {
    let order = g.order() as usize;
    let mut in_set = vec![false; order];
    in_set[0] = true;
    let mut members = vec![0u32];
    let mut queue = vec![0u32];
    for &x in gens {
        if !in_set[x as usize] {
            in_set[x as usize] = true;
            members.push(x);
            queue.push(x);
        }
    }
    let mut head = 0usize;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        for &x in gens {
            let b = g.mul(a, x);
            if !in_set[b as usize] {
                if members.len() as u64 >= cap {
                    return None;
                }
                in_set[b as usize] = true;
                members.push(b);
                queue.push(b);
            }
        }
    }
    members.sort_unstable();
    Some(members)
}

/// Smallest subgroup containing the given elements.
pub fn closure(g: &FiniteGroup, gens: &[ElemId]) -> SubgroupHandle {
    let members = closure_members_capped(g, gens, g.order()).expect("within group order");
    SubgroupHandle { members, generators: gens.to_vec() }
}

pub fn trivial_subgroup(_g: &FiniteGroup) -> SubgroupHandle {
    SubgroupHandle { members: vec![0], generators: vec![] }
}

pub fn full_subgroup(g: &FiniteGroup) -> SubgroupHandle {
    SubgroupHandle {
        members: g.elements().collect(),
        generators: g.generators().to_vec(),
    }
}

/// Deterministic small generating sequence for a closed member set: scan
/// members in id order, adopting each element not yet generated.
pub fn canonical_generators(g: &FiniteGroup, members: &[ElemId]) -> Vec<ElemId> {
    let mut gens: Vec<ElemId> = Vec::new();
    let mut have: Vec<ElemId> = vec![0];
    for &m in members {
        if have.binary_search(&m).is_err() {
            gens.push(m);
            have = closure_members_capped(g, &gens, g.order()).unwrap();
            if have.len() == members.len() {
                break;
            }
        }
    }
    gens
}

pub fn is_normal(g: &FiniteGroup, h: &SubgroupHandle) -> bool {
    if h.order() == g.order() {
        return true;
    }
    for &x in &h.generators {
        for &gg in g.generators() {
            if !h.contains(g.conj(x, gg)) {
                return false;
            }
        }
    }
    true
}

pub fn conjugate_subgroup(g: &FiniteGroup, h: &SubgroupHandle, x: ElemId) -> SubgroupHandle {
    let mut members: Vec<ElemId> = h.members.iter().map(|&m| g.conj(m, x)).collect();
    members.sort_unstable();
    let generators = h.generators.iter().map(|&m| g.conj(m, x)).collect();
    SubgroupHandle { members, generators }
}

/// Sorted member sets of all distinct conjugates; the first entry is the
/// lexicographically smallest and serves as the class-canonical form.
pub fn conjugate_orbit(g: &FiniteGroup, members: &[ElemId]) -> Vec<Vec<ElemId>> {
    let mut seen: HashSet<Vec<ElemId>> = HashSet::new();
    for x in g.elements() {
        let mut conj: Vec<ElemId> = members.iter().map(|&m| g.conj(m, x)).collect();
        conj.sort_unstable();
        seen.insert(conj);
    }
    let mut orbit: Vec<Vec<ElemId>> = seen.into_iter().collect();
    orbit.sort();
    orbit
}

/// Smallest normal subgroup containing `h`.
pub fn normal_closure(g: &FiniteGroup, h: &SubgroupHandle) -> SubgroupHandle {
    let mut gens = h.generators.clone();
    if gens.is_empty() {
        return trivial_subgroup(g);
    }
    loop {
        let members = closure_members_capped(g, &gens, g.order()).unwrap();
        let mut grew = false;
        'scan: for i in 0..gens.len() {
            for &gg in g.generators() {
                let c = g.conj(gens[i], gg);
                if members.binary_search(&c).is_err() {
                    gens.push(c);
                    grew = true;
                    break 'scan;
                }
            }
        }
        if !grew {
            return SubgroupHandle { members, generators: gens };
        }
    }
}

pub fn intersection_members(a: &SubgroupHandle, b: &SubgroupHandle) -> Vec<ElemId> {
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    small.members.iter().copied().filter(|&m| big.contains(m)).collect()
}

/// H ∩ K = 1?
pub fn intersect_trivially(a: &SubgroupHandle, b: &SubgroupHandle) -> bool {
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    small.members.iter().all(|&m| m == 0 || !big.contains(m))
}

/// Number of distinct products hk. Equals |H||K| / |H∩K|.
pub fn product_count(g: &FiniteGroup, a: &SubgroupHandle, b: &SubgroupHandle) -> u64 {
    let mut seen = vec![false; g.order() as usize];
    let mut count = 0u64;
    for &h in &a.members {
        for &k in &b.members {
            let p = g.mul(h, k);
            if !seen[p as usize] {
                seen[p as usize] = true;
                count += 1;
            }
        }
    }
    count
}

pub fn join(g: &FiniteGroup, a: &SubgroupHandle, b: &SubgroupHandle) -> SubgroupHandle {
    let mut gens = a.generators.clone();
    gens.extend_from_slice(&b.generators);
    closure(g, &gens)
}

pub fn is_cyclic_subgroup(g: &FiniteGroup, h: &SubgroupHandle) -> bool {
    h.members.iter().any(|&m| g.element_order(m) == h.order())
}

pub fn is_abelian_subgroup(g: &FiniteGroup, h: &SubgroupHandle) -> bool {
    for &a in &h.generators {
        for &b in &h.generators {
            if g.mul(a, b) != g.mul(b, a) {
                return false;
            }
        }
    }
    true
}

/// The subgroup viewed as a group of its own.
pub fn subgroup_as_group(g: &FiniteGroup, h: &SubgroupHandle) -> FiniteGroup {
    g.subgroup_group(&h.members, &h.generators)
}

/// Quotient G/N on minimal coset representatives.
pub fn quotient_group(g: &FiniteGroup, n: &SubgroupHandle) -> Result<FiniteGroup> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    Ok(g.quotient_by(&n.members))
}

/// Preimage in G of a subgroup of a quotient of G.
pub fn quotient_pullback(
    g: &FiniteGroup,
    q: &FiniteGroup,
    sub_of_q: &SubgroupHandle,
) -> SubgroupHandle {
    let members: Vec<ElemId> = g
        .elements()
        .filter(|&x| sub_of_q.contains(q.quotient_class_of(x).expect("quotient backend")))
        .collect();
    SubgroupHandle::from_members(g, members)
}

/// All minimal normal subgroups, each exactly once. A minimal normal
/// subgroup is the normal closure of any of its nontrivial elements, so the
/// minimal elements of {ncl(<x>)} are exactly the minimal normal subgroups.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<SubgroupHandle> {
    if g.order() == 1 {
        return Vec::new();
    }
    let mut ncls: Vec<SubgroupHandle> = Vec::new();
    let mut seen: HashSet<Vec<ElemId>> = HashSet::new();
    for x in 1..g.order() as ElemId {
        let h = closure(g, &[x]);
        let n = normal_closure(g, &h);
        if seen.insert(n.members.clone()) {
            ncls.push(n);
        }
    }
    let mut minimal: Vec<SubgroupHandle> = Vec::new();
    'outer: for i in 0..ncls.len() {
        for j in 0..ncls.len() {
            if i != j
                && ncls[j].order() < ncls[i].order()
                && ncls[j].members.iter().all(|&m| ncls[i].contains(m))
            {
                continue 'outer;
            }
        }
        minimal.push(ncls[i].clone());
    }
    minimal.sort_by(|a, b| a.members.cmp(&b.members));
    minimal
}

/// All normal subgroups with order at most `max_order`, or None if more than
/// `max_count` of them exist. Every normal subgroup is a join of normal
/// closures of single elements, so join-closure of those seeds is complete;
/// intermediate joins stay inside the target subgroup, so pruning at
/// `max_order` keeps the enumeration complete for the bounded set.
pub fn normal_subgroups_bounded(
    g: &FiniteGroup,
    max_order: u64,
    max_count: usize,
) -> Option<Vec<SubgroupHandle>> {
    let mut seeds: Vec<SubgroupHandle> = Vec::new();
    let mut seen: HashSet<Vec<ElemId>> = HashSet::new();
    seen.insert(vec![0]);
    for x in 1..g.order() as ElemId {
        let n = normal_closure(g, &closure(g, &[x]));
        if n.order() <= max_order && seen.insert(n.members.clone()) {
            seeds.push(n);
        }
    }
    let mut all: Vec<SubgroupHandle> = vec![trivial_subgroup(g)];
    all.extend(seeds.iter().cloned());
    if all.len() > max_count {
        return None;
    }
    let mut worklist: Vec<usize> = (0..all.len()).collect();
    while let Some(i) = worklist.pop() {
        for s in 0..seeds.len() {
            let j = join(g, &all[i], &seeds[s]);
            if j.order() <= max_order && !seen.contains(&j.members) {
                seen.insert(j.members.clone());
                all.push(j);
                if all.len() > max_count {
                    return None;
                }
                worklist.push(all.len() - 1);
            }
        }
    }
    all.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Some(all)
}

/// Largest normal subgroup of order coprime to p: iteratively pull back the
/// p'-socle of successive quotients until none remains.
pub fn o_pprime(g: &FiniteGroup, p: u64) -> SubgroupHandle {
    let mut n = trivial_subgroup(g);
    loop {
        let q = g.quotient_by(&n.members);
        let mins = minimal_normal_subgroups(&q);
        let mut gens_new: Vec<ElemId> = n.generators.clone();
        let mut grew = false;
        for m in mins {
            if m.order() % p != 0 {
                let pre = quotient_pullback(g, &q, &m);
                for &x in &pre.generators {
                    gens_new.push(x);
                }
                grew = true;
            }
        }
        if !grew {
            return n;
        }
        n = closure(g, &gens_new);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;

    fn a4() -> FiniteGroup {
        FiniteGroup::from_permutations(
            4,
            &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
            Caps::default(),
        )
        .unwrap()
    }

    fn c6() -> FiniteGroup {
        FiniteGroup::from_permutations(6, &[vec![1, 2, 3, 4, 5, 0]], Caps::default()).unwrap()
    }

    #[test]
    fn closure_of_empty_is_trivial() {
        let g = a4();
        let h = closure(&g, &[]);
        assert_eq!(h.order(), 1);
        assert_eq!(h.members, vec![0]);
    }

    #[test]
    fn closure_of_three_cycle() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 3).unwrap();
        let h = closure(&g, &[x]);
        assert_eq!(h.order(), 3);
    }

    #[test]
    fn trivial_subgroup_is_normal() {
        let g = a4();
        assert!(is_normal(&g, &trivial_subgroup(&g)));
        assert!(is_normal(&g, &full_subgroup(&g)));
    }

    #[test]
    fn three_cycle_not_normal_in_a4() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 3).unwrap();
        let h = closure(&g, &[x]);
        assert!(!is_normal(&g, &h));
        // Sylow-3 count of A_4 is 4: verify by enumeration
        let orbit = conjugate_orbit(&g, &h.members);
        assert_eq!(orbit.len(), 4);
    }

    #[test]
    fn normal_closure_of_double_transposition_is_v4() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 2).unwrap();
        let n = normal_closure(&g, &closure(&g, &[x]));
        assert_eq!(n.order(), 4);
        assert!(is_normal(&g, &n));
    }

    #[test]
    fn conjugate_preserves_order() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 3).unwrap();
        let h = closure(&g, &[x]);
        for y in g.elements() {
            assert_eq!(conjugate_subgroup(&g, &h, y).order(), 3);
        }
    }

    #[test]
    fn minimal_normals_of_a4() {
        let g = a4();
        let mins = minimal_normal_subgroups(&g);
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
    }

    #[test]
    fn minimal_normals_of_c2xc2() {
        let g = FiniteGroup::from_permutations(
            4,
            &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]],
            Caps::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 4);
        let mins = minimal_normal_subgroups(&g);
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|m| m.order() == 2));
    }

    #[test]
    fn o_pprime_of_c6() {
        let g = c6();
        let o2 = o_pprime(&g, 2);
        assert_eq!(o2.order(), 3);
        let o3 = o_pprime(&g, 3);
        assert_eq!(o3.order(), 2);
    }

    #[test]
    fn o_pprime_of_a4_is_trivial() {
        let g = a4();
        assert_eq!(o_pprime(&g, 2).order(), 1);
        // V4 is a normal 3'-subgroup
        assert_eq!(o_pprime(&g, 3).order(), 4);
    }

    #[test]
    fn product_count_identity() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 3).unwrap();
        let c3 = closure(&g, &[x]);
        let v4 = normal_closure(
            &g,
            &closure(&g, &[g.elements().find(|&e| g.element_order(e) == 2).unwrap()]),
        );
        assert!(intersect_trivially(&c3, &v4));
        assert_eq!(product_count(&g, &c3, &v4), 12);
    }

    #[test]
    fn quotient_requires_normal() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 3).unwrap();
        let h = closure(&g, &[x]);
        assert!(matches!(quotient_group(&g, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn normal_subgroups_of_a4() {
        let g = a4();
        let all = normal_subgroups_bounded(&g, 12, 100).unwrap();
        let orders: Vec<u64> = all.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 4, 12]);
    }

    #[test]
    fn canonical_generators_regenerate() {
        let g = a4();
        let v4 = o_pprime(&g, 3);
        let gens = canonical_generators(&g, &v4.members);
        let rebuilt = closure(&g, &gens);
        assert_eq!(rebuilt.members, v4.members);
        assert!(gens.len() <= 2);
    }
}
