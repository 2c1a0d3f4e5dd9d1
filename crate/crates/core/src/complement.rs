//! Complement search: does a subgroup H have a complement K (G = HK,
//! H ∩ K = 1)?
//!
//! Positive witnesses come from a backtracking generator-growth search:
//! grow a candidate subgroup one generator at a time, pruning any branch
//! whose closure order fails to divide the complement order or whose
//! closure meets H beyond the identity. Both prunes are sound (every
//! partial closure inside a true complement inherits both properties), so
//! the search can only miss witnesses by exhausting its node budget.
//! Non-complementedness is never certified by the budgeted search: it falls
//! through to exhaustive conjugacy-class enumeration of all subgroups of
//! the complement order.

use crate::error::Result;
use crate::group::{ElemId, FiniteGroup};
use crate::lattice::{subgroups_up_to_conjugacy, OrderFilter};
use crate::subgroup::{
    canonical_generators, trivial_subgroup, SubgroupHandle,
};

/// Node budget for one backtracking search. Each node is one capped closure.
const SEARCH_BUDGET: u64 = 200_000;

pub struct ComplementResult {
    pub complemented: bool,
    pub witness: Option<SubgroupHandle>,
}

/// Closure of `gens`, aborted as soon as it outgrows `max` members or hits
/// a forbidden element (H beyond the identity).
fn guarded_closure(
    g: &FiniteGroup,
    gens: &[ElemId],
    max: u64,
    forbidden: Option<&[bool]>,
) -> Option<Vec<ElemId>> {
    let mut in_set = vec![false; g.order() as usize];
    in_set[0] = true;
    let mut members = vec![0u32];
    let mut queue: Vec<ElemId> = vec![0];
    for &x in gens {
        if !in_set[x as usize] {
            if let Some(f) = forbidden {
                if f[x as usize] {
                    return None;
                }
            }
            in_set[x as usize] = true;
            members.push(x);
            queue.push(x);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        for &x in gens {
            let b = g.mul(a, x);
            if !in_set[b as usize] {
                if members.len() as u64 >= max {
                    return None;
                }
                if let Some(f) = forbidden {
                    if f[b as usize] {
                        return None;
                    }
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

struct Search<'a> {
    g: &'a FiniteGroup,
    target: u64,
    /// element ids that a candidate may not contain (H minus identity), or
    /// empty for plain order search
    forbidden: Vec<bool>,
    /// candidate generator pool, pre-filtered, in exploration order
    pool: Vec<ElemId>,
    nodes: u64,
}

impl<'a> Search<'a> {
    /// Depth-first growth. `gens` is the current generator stack, `members`
    /// its closure. Returns a witness member set if found.
    fn grow(&mut self, gens: &mut Vec<ElemId>, members: &[ElemId], from: usize) -> Option<Vec<ElemId>> {
        for i in from..self.pool.len() {
            let x = self.pool[i];
            if members.binary_search(&x).is_ok() {
                continue;
            }
            if self.nodes >= SEARCH_BUDGET {
                return None;
            }
            self.nodes += 1;
            gens.push(x);
            let next = guarded_closure(self.g, gens, self.target, Some(&self.forbidden));
            if let Some(next) = next {
                let m = next.len() as u64;
                if m == self.target {
                    return Some(next);
                }
                if self.target % m == 0 {
                    if let Some(w) = self.grow(gens, &next, i + 1) {
                        return Some(w);
                    }
                }
            }
            gens.pop();
        }
        None
    }

    fn run(&mut self) -> Option<Vec<ElemId>> {
        if self.target == 1 {
            return Some(vec![0]);
        }
        let mut gens = Vec::new();
        self.grow(&mut gens, &[0], 0)
    }
}

fn candidate_pool(g: &FiniteGroup, target: u64, forbidden: &[bool]) -> Vec<ElemId> {
    let mut pool: Vec<ElemId> = (1..g.order() as ElemId)
        .filter(|&x| !forbidden[x as usize] && target % g.element_order(x) == 0)
        .collect();
    // large cyclic subgroups first gets deep witnesses quickly
    pool.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    pool
}

/// Exhaustive route: every subgroup of order `target` up to conjugacy, all
/// conjugates expanded, tested for trivial intersection with `h_bits`.
fn exhaustive_complement(
    g: &FiniteGroup,
    target: u64,
    h_bits: &[bool],
) -> Result<Option<Vec<ElemId>>> {
    let lat = subgroups_up_to_conjugacy(g, OrderFilter::DividesAnyOf(vec![target]))?;
    for class in lat.classes.iter().filter(|c| c.order() == target) {
        for set in &class.orbit {
            if set.iter().all(|&m| m == 0 || !h_bits[m as usize]) {
                return Ok(Some(set.clone()));
            }
        }
    }
    Ok(None)
}

/// Decide whether H is complemented in G; any returned witness K satisfies
/// |K| = |G|/|H| and H ∩ K = 1, which forces G = HK by order count.
pub fn is_complemented(g: &FiniteGroup, h: &SubgroupHandle) -> Result<ComplementResult> {
    let target = g.order() / h.order();
    if h.order() == 1 {
        return Ok(ComplementResult {
            complemented: true,
            witness: Some(crate::subgroup::full_subgroup(g)),
        });
    }
    if target == 1 {
        return Ok(ComplementResult {
            complemented: true,
            witness: Some(trivial_subgroup(g)),
        });
    }
    let mut h_bits = vec![false; g.order() as usize];
    for &m in &h.members {
        h_bits[m as usize] = true;
    }
    h_bits[0] = false;
    let pool = candidate_pool(g, target, &h_bits);
    let mut search = Search { g, target, forbidden: h_bits.clone(), pool, nodes: 0 };
    if let Some(members) = search.run() {
        let witness = SubgroupHandle {
            generators: canonical_generators(g, &members),
            members,
        };
        return Ok(ComplementResult { complemented: true, witness: Some(witness) });
    }
    match exhaustive_complement(g, target, &h_bits)? {
        Some(members) => Ok(ComplementResult {
            complemented: true,
            witness: Some(SubgroupHandle {
                generators: canonical_generators(g, &members),
                members,
            }),
        }),
        None => Ok(ComplementResult { complemented: false, witness: None }),
    }
}

/// Find any subgroup of the given order: budgeted backtracking first, then
/// exhaustive class enumeration.
pub fn find_subgroup_of_order(g: &FiniteGroup, m: u64) -> Result<Option<SubgroupHandle>> {
    if g.order() % m != 0 {
        return Ok(None);
    }
    if m == 1 {
        return Ok(Some(trivial_subgroup(g)));
    }
    if m == g.order() {
        return Ok(Some(crate::subgroup::full_subgroup(g)));
    }
    let forbidden = vec![false; g.order() as usize];
    let pool = candidate_pool(g, m, &forbidden);
    let mut search = Search { g, target: m, forbidden, pool, nodes: 0 };
    if let Some(members) = search.run() {
        return Ok(Some(SubgroupHandle {
            generators: canonical_generators(g, &members),
            members,
        }));
    }
    let lat = subgroups_up_to_conjugacy(g, OrderFilter::DividesAnyOf(vec![m]))?;
    for class in &lat.classes {
        if class.order() == m {
            return Ok(Some(class.rep.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;
    use crate::subgroup::{closure, intersect_trivially, product_count};

    fn a4() -> FiniteGroup {
        FiniteGroup::from_permutations(
            4,
            &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
            Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_subgroup_complemented_by_g() {
        let g = a4();
        let r = is_complemented(&g, &trivial_subgroup(&g)).unwrap();
        assert!(r.complemented);
        assert_eq!(r.witness.unwrap().order(), 12);
    }

    #[test]
    fn whole_group_complemented_by_trivial() {
        let g = a4();
        let r = is_complemented(&g, &crate::subgroup::full_subgroup(&g)).unwrap();
        assert!(r.complemented);
        assert_eq!(r.witness.unwrap().order(), 1);
    }

    #[test]
    fn order_two_in_a4_not_complemented() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 2).unwrap();
        let h = closure(&g, &[x]);
        let r = is_complemented(&g, &h).unwrap();
        assert!(!r.complemented);
        assert!(r.witness.is_none());
    }

    #[test]
    fn c3_in_a4_complemented_by_v4() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 3).unwrap();
        let h = closure(&g, &[x]);
        let r = is_complemented(&g, &h).unwrap();
        assert!(r.complemented);
        let k = r.witness.unwrap();
        assert_eq!(k.order(), 4);
        assert!(intersect_trivially(&h, &k));
        assert_eq!(product_count(&g, &h, &k), 12);
    }

    #[test]
    fn v4_in_a4_complemented_by_c3() {
        let g = a4();
        let v4 = crate::subgroup::o_pprime(&g, 3);
        assert_eq!(v4.order(), 4);
        let r = is_complemented(&g, &v4).unwrap();
        assert!(r.complemented);
        assert_eq!(r.witness.unwrap().order(), 3);
    }

    #[test]
    fn conjugation_invariance_sampled() {
        let g = a4();
        let x = g.elements().find(|&e| g.element_order(e) == 2).unwrap();
        let h = closure(&g, &[x]);
        let base = is_complemented(&g, &h).unwrap().complemented;
        for y in g.elements() {
            let hc = crate::subgroup::conjugate_subgroup(&g, &h, y);
            assert_eq!(is_complemented(&g, &hc).unwrap().complemented, base);
        }
    }

    #[test]
    fn find_order_subgroups() {
        let g = a4();
        assert!(find_subgroup_of_order(&g, 6).unwrap().is_none());
        assert_eq!(find_subgroup_of_order(&g, 4).unwrap().unwrap().order(), 4);
        assert_eq!(find_subgroup_of_order(&g, 1).unwrap().unwrap().order(), 1);
        assert_eq!(find_subgroup_of_order(&g, 12).unwrap().unwrap().order(), 12);
        // 5 does not divide 12
        assert!(find_subgroup_of_order(&g, 5).unwrap().is_none());
    }
}
