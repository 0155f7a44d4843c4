//! Structural classifiers: cyclic, abelian, nilpotent, supersolvable,
//! solvable.

use std::collections::HashMap;

use serde::Serialize;

use crate::grpcore::{ElementSet, Group, GroupError, DEFAULT_NORMAL_BOUND};
use crate::psi::Factorization;

/// The five structure flags; cyclic implies abelian implies nilpotent
/// implies supersolvable implies solvable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub solvable: bool,
    /// True when the supersolvability recursion was skipped for size and the
    /// flag fell back to `solvable`; such records need manual review.
    pub supersolvable_estimated: bool,
}

/// True iff some element has order |G|.
pub fn is_cyclic(g: &Group) -> bool {
    g.element_orders().iter().any(|&o| o as usize == g.order())
}

pub fn is_abelian(g: &Group) -> bool {
    g.is_abelian()
}

/// A finite group is nilpotent iff it is the direct product of its Sylow
/// subgroups; equivalently, for every prime p dividing |G| the set of
/// elements of p-power order is multiplicatively closed (it is then the
/// unique normal Sylow p-subgroup).
pub fn is_nilpotent(g: &Group) -> bool {
    let n = g.order() as u64;
    for &(p, e) in Factorization::of(n).factors() {
        let members: Vec<usize> = (0..g.order())
            .filter(|&i| {
                let o = g.element_order(i).unwrap() as u64;
                // p-power order: o divides p^e.
                p.pow(e) % o == 0
            })
            .collect();
        if members.len() as u64 != p.pow(e) {
            return false;
        }
        let set = ElementSet::from_indices(g.order(), &members);
        for &x in &members {
            for &y in &members {
                if !set.contains(g.mul(x, y)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Derived series reaches the trivial subgroup within log2 |G| steps.
pub fn is_solvable(g: &Group) -> bool {
    let mut current = g.clone();
    let mut steps = 0usize;
    loop {
        if current.order() == 1 {
            return true;
        }
        let derived = current.commutator_subgroup();
        if derived.len() == current.order() {
            return false; // perfect and nontrivial
        }
        // Recurse into the derived subgroup as its own table.
        current = subgroup_as_group(&current, &derived);
        steps += 1;
        if steps > usize::BITS as usize {
            return false;
        }
    }
}

/// Re-indexes a subgroup as a standalone group.
fn subgroup_as_group(g: &Group, s: &ElementSet) -> Group {
    let members: Vec<usize> = s.iter().collect();
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let m = members.len();
    let mut table = vec![0u32; m * m];
    for (a, &x) in members.iter().enumerate() {
        for (b, &y) in members.iter().enumerate() {
            table[a * m + b] = pos[&g.mul(x, y)] as u32;
        }
    }
    Group::from_table(m, table, format!("{}<{}>", g.label(), m)).expect("subgroup table is a group")
}

/// Supersolvability via the prime-order-normal-subgroup recursion: G is
/// supersolvable iff some normal subgroup of prime order has a supersolvable
/// quotient (cyclic-by-supersolvable groups are supersolvable, and a
/// supersolvable group has a prime-order term at the bottom of a chief
/// series). Memoized on the table within one call tree.
pub fn is_supersolvable(g: &Group) -> Result<bool, GroupError> {
    is_supersolvable_bounded(g, DEFAULT_NORMAL_BOUND)
}

pub fn is_supersolvable_bounded(g: &Group, bound: usize) -> Result<bool, GroupError> {
    if g.order() > bound {
        return Err(GroupError::OrderBoundExceeded { order: g.order(), bound });
    }
    let mut memo: HashMap<Vec<u32>, bool> = HashMap::new();
    Ok(supersolvable_rec(g, &mut memo))
}

fn supersolvable_rec(g: &Group, memo: &mut HashMap<Vec<u32>, bool>) -> bool {
    if g.order() == 1 {
        return true;
    }
    if let Some(&v) = memo.get(g.table()) {
        return v;
    }
    let mut result = false;
    let mut seen: std::collections::HashSet<ElementSet> = std::collections::HashSet::new();
    for i in 1..g.order() {
        let o = g.element_order(i).unwrap() as u64;
        if Factorization::of(o).factors().len() != 1 || !is_prime_u64(o) {
            continue;
        }
        let sub = g.subgroup_closure(&ElementSet::singleton(g.order(), i));
        if !seen.insert(sub.clone()) {
            continue;
        }
        if g.is_normal(&sub).unwrap() {
            let quotient = g.quotient(&sub).expect("normal subgroup quotients");
            if supersolvable_rec(&quotient, memo) {
                result = true;
                break;
            }
        }
    }
    memo.insert(g.table().to_vec(), result);
    result
}

fn is_prime_u64(n: u64) -> bool {
    matches!(Factorization::of(n).factors(), [(_, 1)]) && n > 1
}

/// Runs all five classifiers. If |G| exceeds `bound` the supersolvable flag
/// falls back to the solvable flag, marked `supersolvable_estimated`.
pub fn classify_bounded(g: &Group, bound: usize) -> StructureFlags {
    let cyclic = is_cyclic(g);
    let abelian = cyclic || is_abelian(g);
    let nilpotent = abelian || is_nilpotent(g);
    let solvable = nilpotent || is_solvable(g);
    let (supersolvable, estimated) = if nilpotent {
        (true, false)
    } else {
        match is_supersolvable_bounded(g, bound) {
            Ok(v) => (v, false),
            Err(_) => (solvable, true),
        }
    };
    StructureFlags {
        cyclic,
        abelian,
        nilpotent,
        supersolvable,
        solvable,
        supersolvable_estimated: estimated,
    }
}

pub fn classify(g: &Group) -> StructureFlags {
    classify_bounded(g, DEFAULT_NORMAL_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, parse_spec};

    fn group(text: &str) -> Group {
        make(&parse_spec(text).unwrap(), 1024).unwrap()
    }

    #[test]
    fn cyclic_examples() {
        assert!(is_cyclic(&group("C(1)")));
        assert!(is_cyclic(&group("X(C(2),C(3))")));
        assert!(!is_cyclic(&group("ElemAb(2)")));
    }

    #[test]
    fn abelian_examples() {
        assert!(is_abelian(&group("C(12)")));
        assert!(!is_abelian(&group("Q(8)")));
        assert!(!is_abelian(&group("Dih(3)")));
    }

    #[test]
    fn nilpotent_examples() {
        assert!(is_nilpotent(&group("Q(8)")));
        assert!(!is_nilpotent(&group("Sym(3)")));
        assert!(is_nilpotent(&group("X(C(2),C(9))")));
        assert!(is_nilpotent(&group("X(Q(8),C(9))")));
        assert!(!is_nilpotent(&group("Dih(6)")));
    }

    #[test]
    fn solvable_examples() {
        assert!(is_solvable(&group("Alt(4)")));
        assert!(is_solvable(&group("Sym(4)")));
        assert!(!is_solvable(&group("Alt(5)")));
        assert!(!is_solvable(&group("SL(2,5)")));
    }

    #[test]
    fn supersolvable_examples() {
        assert!(!is_supersolvable(&group("Sym(4)")).unwrap());
        assert!(!is_supersolvable(&group("Alt(4)")).unwrap());
        assert!(is_supersolvable(&group("Dih(5)")).unwrap());
        assert!(is_supersolvable(&group("Q(16)")).unwrap());
        assert!(matches!(
            is_supersolvable(&group("C(256)")),
            Err(GroupError::OrderBoundExceeded { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let all_true = classify(&group("C(30)"));
        assert!(all_true.cyclic && all_true.abelian && all_true.nilpotent);
        assert!(all_true.supersolvable && all_true.solvable);
        let s3 = classify(&group("Sym(3)"));
        assert_eq!(
            (s3.cyclic, s3.abelian, s3.nilpotent, s3.supersolvable, s3.solvable),
            (false, false, false, true, true)
        );
        let a5 = classify(&group("Alt(5)"));
        assert!(!a5.cyclic && !a5.abelian && !a5.nilpotent && !a5.supersolvable && !a5.solvable);
    }

    #[test]
    fn implication_chain() {
        for text in ["C(24)", "ElemAb(5)", "Q(32)", "Dih(9)", "Sym(4)", "Alt(5)", "SDP(5,4,4)"] {
            let f = classify(&group(text));
            assert!(!f.cyclic || f.abelian, "{text}");
            assert!(!f.abelian || f.nilpotent, "{text}");
            assert!(!f.nilpotent || f.supersolvable, "{text}");
            assert!(!f.supersolvable || f.solvable, "{text}");
        }
    }
}
