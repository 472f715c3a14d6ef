use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::seeded;

/// Erdős–Rényi `G(n, p)`: pairs `(u, v)`, `u < v`, are visited in lexicographic
/// order and each is kept when `ChaCha8Rng::random_bool(p)` is true. The RNG is
/// `ChaCha8Rng::seed_from_u64(seed)`, so output is reproducible bit-for-bit.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = seeded(seed);
    Ok(sample(n, p, &mut rng))
}

fn sample<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// `G(n, p)` conditioned on connectivity by rejection from one seeded stream.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    const MAX_ATTEMPTS: usize = 100_000;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = seeded(seed);
    for _ in 0..MAX_ATTEMPTS {
        let g = sample(n, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no connected G({n}, {p}) sample within {MAX_ATTEMPTS} attempts"
    )))
}

/// Path `1 - 2 - ... - n`.
pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
}

/// Cycle `1 - 2 - ... - n - 1`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
}

/// Petersen graph: outer 5-cycle `1..5`, inner pentagram `6..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let outer = (1..=5).map(|i| (i, i % 5 + 1));
    let inner = (1..=5).map(|i| (i + 5, (i + 1) % 5 + 6));
    let spokes = (1..=5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("static edge list")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_extremes() {
        assert_eq!(gen_random(5, 0.0, 3).unwrap(), Graph::empty(5));
        assert_eq!(gen_random(5, 1.0, 3).unwrap(), gen_complete(5).unwrap());
        assert!(gen_random(5, 1.5, 3).is_err());
        assert!(gen_random(5, -0.1, 3).is_err());
    }

    #[test]
    fn random_is_seeded() {
        let a = gen_random(8, 0.5, 42).unwrap();
        let b = gen_random(8, 0.5, 42).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = gen_random(40, 0.5, 43).unwrap();
        assert_ne!(gen_random(40, 0.5, 42).unwrap(), c);
    }

    #[test]
    fn connected_sampler() {
        for seed in 0..20 {
            let g = gen_random_connected(10, 0.25, seed).unwrap();
            assert!(g.is_connected());
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(gen_path(2).unwrap().edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(gen_path(1).unwrap(), Graph::empty(1));
        assert_eq!(gen_cycle(3).unwrap(), gen_complete(3).unwrap());
        assert!(gen_cycle(2).is_err());
        let c5 = gen_cycle(5).unwrap();
        assert!(c5.has_edge(5, 1));
        assert_eq!(c5.m(), 5);
        assert!(gen_path(0).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.m(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }
}
