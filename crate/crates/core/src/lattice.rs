//! Subgroup lattice up to conjugacy, maximal subgroups, the Frattini
//! subgroup, and the maximal-subgroup supersolvability test.
//!
//! Enumeration is bottom-up. A cyclic-extension sweep (extend H by a
//! prime-power-order element of its normalizer whose prime power falls into
//! H) finds every subgroup with a subnormal cyclic chain; a join sweep
//! (join each known class with conjugates of cyclic subgroups, to fixpoint)
//! picks up the rest, since every subgroup is a join of cyclic subgroups.
//! Order filters must be divisor-closed for the bottom-up enumeration to be
//! complete, which both provided filters are.

use std::collections::HashMap;

use crate::error::Result;
use crate::fp::prime_factors;
use crate::group::{ElemId, FiniteGroup};
use crate::subgroup::{
    canonical_generators, closure_members_capped, conjugate_orbit, SubgroupHandle,
};

#[derive(Clone, Debug)]
pub enum OrderFilter {
    All,
    /// Admit orders dividing any of the targets (divisor-closed).
    DividesAnyOf(Vec<u64>),
}

impl OrderFilter {
    pub fn admits(&self, m: u64) -> bool {
        match self {
            OrderFilter::All => true,
            OrderFilter::DividesAnyOf(ts) => ts.iter().any(|&t| t % m == 0),
        }
    }

    fn max_admissible(&self, group_order: u64) -> u64 {
        match self {
            OrderFilter::All => group_order,
            OrderFilter::DividesAnyOf(ts) => {
                ts.iter().copied().filter(|&t| group_order % t == 0).max().unwrap_or(1)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Lexicographically smallest member set in the orbit.
    pub rep: SubgroupHandle,
    /// All distinct conjugate member sets, sorted.
    pub orbit: Vec<Vec<ElemId>>,
}

impl ConjugacyClass {
    pub fn order(&self) -> u64 {
        self.rep.order()
    }
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub classes: Vec<ConjugacyClass>,
}

impl Lattice {
    pub fn class_of(&self, members: &[ElemId]) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.orbit.binary_search_by(|s| s.as_slice().cmp(members)).is_ok())
    }
}

struct Builder<'a> {
    g: &'a FiniteGroup,
    filter: OrderFilter,
    max_adm: u64,
    classes: Vec<ConjugacyClass>,
    seen: HashMap<Vec<ElemId>, usize>,
}

impl<'a> Builder<'a> {
    /// Register a subgroup's class; returns (class index, was_new).
    fn add(&mut self, members: Vec<ElemId>) -> (usize, bool) {
        if let Some(&i) = self.seen.get(&members) {
            return (i, false);
        }
        let orbit = conjugate_orbit(self.g, &members);
        let rep_members = orbit[0].clone();
        let rep = SubgroupHandle {
            generators: canonical_generators(self.g, &rep_members),
            members: rep_members,
        };
        let idx = self.classes.len();
        for set in &orbit {
            self.seen.insert(set.clone(), idx);
        }
        self.classes.push(ConjugacyClass { rep, orbit });
        (idx, true)
    }
}

/// One representative per conjugacy class of subgroups whose order passes
/// the filter, with full conjugate orbits.
pub fn subgroups_up_to_conjugacy(
    g: &FiniteGroup,
    filter: OrderFilter,
) -> Result<Lattice> {
    g.caps().check_lattice(g.order())?;
    let max_adm = filter.max_admissible(g.order());
    let mut b = Builder {
        g,
        filter,
        max_adm,
        classes: Vec::new(),
        seen: HashMap::new(),
    };
    b.add(vec![0]);

    // cyclic seeds
    let mut cyclic_class_ids: Vec<usize> = Vec::new();
    for x in 1..g.order() as ElemId {
        if b.seen.contains_key(&cyclic_members(g, x)) {
            continue;
        }
        let members = cyclic_members(g, x);
        if b.filter.admits(members.len() as u64) {
            let (idx, fresh) = b.add(members);
            if fresh {
                cyclic_class_ids.push(idx);
            }
        }
    }

    // cyclic-extension sweep
    let mut work: Vec<usize> = (0..b.classes.len()).collect();
    while let Some(i) = work.pop() {
        let h_members = b.classes[i].rep.members.clone();
        let h_order = h_members.len() as u64;
        let nz = normalizer_members(g, &b.classes[i].rep);
        for q in prime_factors(g.order() / h_order) {
            if !b.filter.admits(h_order * q) {
                continue;
            }
            for &x in &nz {
                if h_members.binary_search(&x).is_ok() {
                    continue;
                }
                let ord = g.element_order(x);
                if !is_power_of(ord, q) {
                    continue;
                }
                if h_members.binary_search(&g.power(x, q)).is_err() {
                    continue;
                }
                // J = H ∪ Hx ∪ ... ∪ Hx^(q-1), order |H|·q
                let mut j = h_members.clone();
                let mut xs = x;
                for _ in 1..q {
                    for &h in &h_members {
                        j.push(g.mul(h, xs));
                    }
                    xs = g.mul(xs, x);
                }
                j.sort_unstable();
                j.dedup();
                debug_assert_eq!(j.len() as u64, h_order * q);
                let (idx, fresh) = b.add(j);
                if fresh {
                    work.push(idx);
                }
            }
        }
    }

    // join sweep to fixpoint: catches subgroups with no subnormal cyclic
    // chain (nontrivial perfect residual)
    let cyclic_data: Vec<(u64, Vec<Vec<ElemId>>)> = cyclic_class_ids
        .iter()
        .map(|&i| (b.classes[i].order(), b.classes[i].orbit.clone()))
        .collect();
    let mut work: Vec<usize> = (0..b.classes.len()).collect();
    while let Some(i) = work.pop() {
        let a_members = b.classes[i].rep.members.clone();
        let a_gens = b.classes[i].rep.generators.clone();
        for (c_order, orbit) in &cyclic_data {
            for set in orbit {
                // a generator of the conjugate cyclic subgroup
                let Some(&gen) = set
                    .iter()
                    .find(|&&m| g.element_order(m) == *c_order)
                else {
                    continue;
                };
                if a_members.binary_search(&gen).is_ok() {
                    continue;
                }
                let mut gens = a_gens.clone();
                gens.push(gen);
                let Some(j) = closure_members_capped(g, &gens, b.max_adm) else {
                    continue;
                };
                if !b.filter.admits(j.len() as u64) {
                    continue;
                }
                let (idx, fresh) = b.add(j);
                if fresh {
                    work.push(idx);
                }
            }
        }
    }

    if b.filter.admits(g.order()) {
        b.add(g.elements().collect());
    }

    let mut classes = b.classes;
    classes.sort_by(|a, c| (a.order(), &a.rep.members).cmp(&(c.order(), &c.rep.members)));
    Ok(Lattice { classes })
}

fn cyclic_members(g: &FiniteGroup, x: ElemId) -> Vec<ElemId> {
    let mut members = vec![0];
    let mut acc = x;
    while acc != 0 {
        members.push(acc);
        acc = g.mul(acc, x);
    }
    members.sort_unstable();
    members
}

fn is_power_of(mut n: u64, q: u64) -> bool {
    while n % q == 0 {
        n /= q;
    }
    n == 1
}

pub fn normalizer_members(g: &FiniteGroup, h: &SubgroupHandle) -> Vec<ElemId> {
    g.elements()
        .filter(|&x| {
            h.generators.iter().all(|&s| h.contains(g.conj(s, x)))
        })
        .collect()
}

/// Class indices of the maximal subgroups in a full lattice.
pub fn maximal_class_indices(lat: &Lattice) -> Vec<usize> {
    let n = lat.classes.len();
    let full_order = lat.classes.last().map(|c| c.order()).unwrap_or(1);
    let mut out = Vec::new();
    'cand: for i in 0..n {
        let a = &lat.classes[i];
        if a.order() == full_order {
            continue;
        }
        for b in &lat.classes {
            if b.order() <= a.order() || b.order() == full_order || b.order() % a.order() != 0
            {
                continue;
            }
            for set in &b.orbit {
                if is_subset(&a.rep.members, set) {
                    continue 'cand;
                }
            }
        }
        out.push(i);
    }
    out
}

fn is_subset(small: &[ElemId], big_sorted: &[ElemId]) -> bool {
    small.iter().all(|m| big_sorted.binary_search(m).is_ok())
}

/// Intersection of all maximal subgroups, computed from a full lattice.
pub fn frattini_from(g: &FiniteGroup, lat: &Lattice) -> SubgroupHandle {
    let maxima = maximal_class_indices(lat);
    if maxima.is_empty() {
        // no proper subgroup at all: G trivial or of prime order
        return SubgroupHandle::from_members(g, g.elements().collect());
    }
    let mut keep = vec![true; g.order() as usize];
    for &i in &maxima {
        for set in &lat.classes[i].orbit {
            let mut next = vec![false; g.order() as usize];
            for &m in set {
                if keep[m as usize] {
                    next[m as usize] = true;
                }
            }
            keep = next;
        }
    }
    let members: Vec<ElemId> =
        (0..g.order() as ElemId).filter(|&e| keep[e as usize]).collect();
    SubgroupHandle::from_members(g, members)
}

/// Frattini subgroup: intersection of all maximal subgroups.
pub fn frattini(g: &FiniteGroup) -> Result<SubgroupHandle> {
    let lat = subgroups_up_to_conjugacy(g, OrderFilter::All)?;
    Ok(frattini_from(g, &lat))
}

/// Huppert's criterion: supersolvable iff every maximal subgroup has prime
/// index.
pub fn is_supersolvable(g: &FiniteGroup) -> Result<bool> {
    if g.order() == 1 {
        return Ok(true);
    }
    let lat = subgroups_up_to_conjugacy(g, OrderFilter::All)?;
    Ok(is_supersolvable_from(g, &lat))
}

pub fn is_supersolvable_from(g: &FiniteGroup, lat: &Lattice) -> bool {
    maximal_class_indices(lat).iter().all(|&i| {
        let index = g.order() / lat.classes[i].order();
        crate::fp::is_prime(index)
    })
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

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], Caps::default())
            .unwrap()
    }

    fn d8() -> FiniteGroup {
        FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]], Caps::default())
            .unwrap()
    }

    fn c4() -> FiniteGroup {
        FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0]], Caps::default()).unwrap()
    }

    #[test]
    fn a4_full_lattice() {
        let g = a4();
        let lat = subgroups_up_to_conjugacy(&g, OrderFilter::All).unwrap();
        let orders: Vec<u64> = lat.classes.iter().map(|c| c.order()).collect();
        // 1, C2, C3, V4, A4
        assert_eq!(orders, vec![1, 2, 3, 4, 12]);
        let sizes: Vec<usize> = lat.classes.iter().map(|c| c.orbit.len()).collect();
        assert_eq!(sizes, vec![1, 3, 4, 1, 1]);
    }

    #[test]
    fn a4_has_no_order_six_subgroup() {
        let g = a4();
        let lat = subgroups_up_to_conjugacy(&g, OrderFilter::DividesAnyOf(vec![6])).unwrap();
        assert!(lat.classes.iter().all(|c| c.order() != 6));
        let orders: Vec<u64> = lat.classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 3]);
    }

    #[test]
    fn order_filter_trivial_class() {
        let g = a4();
        let lat = subgroups_up_to_conjugacy(&g, OrderFilter::DividesAnyOf(vec![1])).unwrap();
        assert_eq!(lat.classes.len(), 1);
        assert_eq!(lat.classes[0].order(), 1);
    }

    #[test]
    fn frattini_of_c4_is_c2() {
        let g = c4();
        let f = frattini(&g).unwrap();
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn frattini_of_a4_is_trivial() {
        let g = a4();
        assert_eq!(frattini(&g).unwrap().order(), 1);
    }

    #[test]
    fn frattini_of_elementary_abelian_is_trivial() {
        let g = FiniteGroup::from_permutations(
            4,
            &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]],
            Caps::default(),
        )
        .unwrap();
        assert_eq!(frattini(&g).unwrap().order(), 1);
    }

    #[test]
    fn supersolvability() {
        assert!(is_supersolvable(&s3()).unwrap());
        assert!(!is_supersolvable(&a4()).unwrap());
        assert!(is_supersolvable(&d8()).unwrap());
        assert!(is_supersolvable(&c4()).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let caps = Caps { lattice_cap: 10, ..Caps::default() };
        let g = FiniteGroup::from_permutations(
            4,
            &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
            caps,
        )
        .unwrap();
        assert!(subgroups_up_to_conjugacy(&g, OrderFilter::All).is_err());
    }

    #[test]
    fn d8_order_four_subgroups() {
        let g = d8();
        let lat = subgroups_up_to_conjugacy(&g, OrderFilter::All).unwrap();
        let order4: Vec<&ConjugacyClass> =
            lat.classes.iter().filter(|c| c.order() == 4).collect();
        // one cyclic, two Klein classes, all normal (orbit size 1)
        assert_eq!(order4.len(), 3);
        assert!(order4.iter().all(|c| c.orbit.len() == 1));
        let cyclic_count = order4
            .iter()
            .filter(|c| crate::subgroup::is_cyclic_subgroup(&g, &c.rep))
            .count();
        assert_eq!(cyclic_count, 1);
    }
}
