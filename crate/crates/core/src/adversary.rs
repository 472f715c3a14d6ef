//! The two graph families behind the `Ω(n^1.5)` adversary lower bound for
//! maximal independent set in the matrix model, and exhaustive checks of the
//! single-edge flips relating them.
//!
//! `f(G) = 1` iff `G` has a maximal independent set of size exactly `2n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oct::enumerate_maximal_is;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::InvalidParameter(format!("unknown gadget family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Red,
    Green,
    Black,
}

/// One member of family A or B on `3n + 1` vertices.
///
/// Layout: red vertices first, then green vertices pair by pair, black last.
/// A has `n` red and `n` green pairs; B has `n + 2` red and `n − 1` green pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub family: Family,
    pub n: usize,
    pub graph: Graph,
    /// `roles[v - 1]` is the role of vertex `v`.
    pub roles: Vec<Role>,
    pub green_pairs: Vec<(usize, usize)>,
}

impl GadgetInstance {
    pub fn black(&self) -> usize {
        3 * self.n + 1
    }

    pub fn reds(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.roles.len()).filter(|&v| self.roles[v - 1] == Role::Red)
    }

    /// `f` of this instance.
    pub fn f(&self) -> Result<bool> {
        has_maximal_is_of_size(&self.graph, 2 * self.n)
    }
}

pub fn build_gadget(family: Family, n: usize) -> Result<GadgetInstance> {
    if n == 0 {
        return Err(Error::InvalidParameter("gadgets need n >= 1".into()));
    }
    let (reds, pairs) = match family {
        Family::A => (n, n),
        Family::B => (n + 2, n - 1),
    };
    let total = 3 * n + 1;
    let black = total;
    let mut roles = vec![Role::Red; reds];
    roles.extend(std::iter::repeat_n(Role::Green, 2 * pairs));
    roles.push(Role::Black);
    let green_pairs: Vec<(usize, usize)> = (0..pairs).map(|i| (reds + 2 * i + 1, reds + 2 * i + 2)).collect();
    let edges = green_pairs.iter().copied().chain((1..black).map(|v| (v, black)));
    Ok(GadgetInstance { family, n, graph: Graph::from_edges(total, edges)?, roles, green_pairs })
}

/// Whether some maximal independent set of `g` has exactly `t` vertices.
pub fn has_maximal_is_of_size(g: &Graph, t: usize) -> Result<bool> {
    Ok(enumerate_maximal_is(g, Some(t))?.iter().any(|s| s.len() == t))
}

/// Which family, if any, `g` belongs to for parameter `n`, up to relabelling: one
/// vertex adjacent to all others, and the rest a matching plus isolated vertices
/// with the right counts.
pub fn classify(g: &Graph, n: usize) -> Option<Family> {
    if g.n() != 3 * n + 1 {
        return None;
    }
    for black in g.vertices().filter(|&v| g.degree(v) == g.n() - 1) {
        let rest = g.vertices().filter(|&v| v != black);
        let inner_degree = |v: usize| g.degree(v) - 1;
        if rest.clone().any(|v| inner_degree(v) > 1) {
            continue;
        }
        let isolated = rest.filter(|&v| inner_degree(v) == 0).count();
        let pairs = (g.n() - 1 - isolated) / 2;
        if isolated == n && pairs == n {
            return Some(Family::A);
        }
        if isolated == n + 2 && pairs + 1 == n {
            return Some(Family::B);
        }
    }
    None
}

/// The adversary quantities for parameter `n`: `m` one-edge moves from each A
/// graph into B, `m′` from each B graph into A, and the bound `√(m·m′)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlipCounts {
    pub n: usize,
    pub m: u64,
    pub m_prime: u64,
    pub bound: f64,
}

pub fn flip_relation_counts(n: usize) -> Result<FlipCounts> {
    if n == 0 {
        return Err(Error::InvalidParameter("gadgets need n >= 1".into()));
    }
    let m = n as u64;
    let m_prime = ((n + 2) * (n + 1) / 2) as u64;
    Ok(FlipCounts { n, m, m_prime, bound: ((m * m_prime) as f64).sqrt() })
}

/// Result of flipping every vertex pair of one gadget instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlipAudit {
    pub family: Family,
    pub n: usize,
    pub f: bool,
    /// Flips whose result lies in the other family.
    pub cross_family: u64,
    /// Cross-family flips whose result has the other family's `f` value.
    pub cross_family_f_changed: u64,
    /// All flips that change `f`, in or out of the families.
    pub f_changed: u64,
    pub pairs_tried: u64,
}

impl FlipAudit {
    /// Instance value and cross-family count match the construction.
    pub fn consistent(&self) -> bool {
        let counts = flip_relation_counts(self.n).expect("n >= 1");
        let expected = match self.family {
            Family::A => counts.m,
            Family::B => counts.m_prime,
        };
        self.f == (self.family == Family::A)
            && self.cross_family == expected
            && self.cross_family_f_changed == expected
    }
}

/// Toggles every one of the `C(3n+1, 2)` vertex pairs of the instance in turn and
/// re-evaluates family membership and `f`.
pub fn audit_flips(family: Family, n: usize) -> Result<FlipAudit> {
    let inst = build_gadget(family, n)?;
    let f = inst.f()?;
    let other = match family {
        Family::A => Family::B,
        Family::B => Family::A,
    };
    let g = &inst.graph;
    let mut audit = FlipAudit { family, n, f, cross_family: 0, cross_family_f_changed: 0, f_changed: 0, pairs_tried: 0 };
    for u in g.vertices() {
        for v in u + 1..=g.n() {
            let edges = g
                .edges()
                .filter(|&e| e != (u, v))
                .chain((!g.has_edge(u, v)).then_some((u, v)));
            let h = Graph::from_edges(g.n(), edges)?;
            let fh = has_maximal_is_of_size(&h, 2 * n)?;
            audit.pairs_tried += 1;
            if fh != f {
                audit.f_changed += 1;
            }
            if classify(&h, n) == Some(other) {
                audit.cross_family += 1;
                if fh != f {
                    audit.cross_family_f_changed += 1;
                }
            }
        }
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_complete;
    use crate::VertexSet;

    #[test]
    fn construction_examples() {
        let a2 = build_gadget(Family::A, 2).unwrap();
        assert_eq!(a2.graph.n(), 7);
        assert_eq!(a2.reds().count(), 2);
        assert_eq!(a2.green_pairs, vec![(3, 4), (5, 6)]);
        assert_eq!(a2.graph.m(), 2 + 6);

        let b2 = build_gadget(Family::B, 2).unwrap();
        assert_eq!(b2.graph.n(), 7);
        assert_eq!(b2.reds().count(), 4);
        assert_eq!(b2.green_pairs, vec![(5, 6)]);
        assert_eq!(b2.graph.m(), 1 + 6);

        let a1 = build_gadget(Family::A, 1).unwrap();
        assert_eq!(a1.graph.n(), 4);
        assert_eq!(a1.graph.m(), 1 + 3);
        assert_eq!(build_gadget(Family::B, 1).unwrap().green_pairs, vec![]);
        assert!(build_gadget(Family::A, 0).is_err());
    }

    #[test]
    fn structural_invariants() {
        for n in 1..=6 {
            for family in [Family::A, Family::B] {
                let inst = build_gadget(family, n).unwrap();
                let g = &inst.graph;
                assert_eq!(g.n(), 3 * n + 1);
                assert_eq!(g.degree(inst.black()), 3 * n);
                let reds: Vec<usize> = inst.reds().collect();
                assert!(reds.iter().all(|&r| g.degree(r) == 1));
                for &(a, b) in &inst.green_pairs {
                    assert!(g.has_edge(a, b));
                    assert_eq!(g.degree(a), 2);
                    assert_eq!(g.degree(b), 2);
                }
                assert_eq!(classify(g, n), Some(family));
            }
        }
    }

    #[test]
    fn f_examples() {
        let a2 = build_gadget(Family::A, 2).unwrap();
        assert!(has_maximal_is_of_size(&a2.graph, 4).unwrap());
        assert!(crate::brute::is_maximal_is(&a2.graph, &VertexSet::from([1, 2, 3, 5])));
        assert!(!has_maximal_is_of_size(&build_gadget(Family::B, 2).unwrap().graph, 4).unwrap());
        assert!(has_maximal_is_of_size(&gen_complete(3).unwrap(), 1).unwrap());
    }

    #[test]
    fn counts() {
        let c = flip_relation_counts(2).unwrap();
        assert_eq!((c.m, c.m_prime), (2, 6));
        assert!((c.bound - 12f64.sqrt()).abs() < 1e-12);
        let c = flip_relation_counts(1).unwrap();
        assert_eq!((c.m, c.m_prime), (1, 3));
        let c = flip_relation_counts(3).unwrap();
        assert_eq!((c.m, c.m_prime), (3, 10));
        let ratios: Vec<f64> = (1..=6).map(|n| flip_relation_counts(n).unwrap().bound / (n as f64).powf(1.5)).collect();
        assert!(ratios.windows(2).all(|w| w[1] < w[0]));
        assert!(ratios[5] > 1.0 / 2f64.sqrt());
    }

    #[test]
    fn exhaustive_flips() {
        for n in 1..=3 {
            for family in [Family::A, Family::B] {
                let audit = audit_flips(family, n).unwrap();
                assert!(audit.consistent(), "{audit:?}");
                assert_eq!(audit.pairs_tried, ((3 * n + 1) * 3 * n / 2) as u64);
            }
        }
    }
}
