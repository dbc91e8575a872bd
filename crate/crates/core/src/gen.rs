//! Seeded random instance generators.
//!
//! Every generator draws only from the `Rng` it is handed, so a sweep is
//! replayed exactly from its `(seed, index)` pairs via [`instance_rng`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use crate::graph::{Multigraph, VertexId};
use crate::orientation::{ImbalanceSpec, Z3Boundary};

/// Independent stream number `index` of the sweep seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `m` edges with endpoints drawn uniformly among distinct pairs of `n`
/// vertices; parallel edges arise naturally. No edges when `n < 2`.
pub fn random_multigraph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Multigraph {
    let mut g = Multigraph::with_vertices(n);
    if n < 2 {
        return g;
    }
    for _ in 0..m {
        let a = rng.gen_range(0..n as u32);
        let mut b = rng.gen_range(0..n as u32 - 1);
        if b >= a {
            b += 1;
        }
        g.add_edge(VertexId(a), VertexId(b)).expect("distinct endpoints");
    }
    g
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_simple_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Multigraph {
    let mut g = Multigraph::with_vertices(n);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.gen_bool(p) {
                g.add_edge(VertexId(a), VertexId(b)).expect("distinct endpoints");
            }
        }
    }
    g
}

const PAIRING_ATTEMPTS: usize = 10_000;

/// Configuration model for a prescribed degree sequence: stubs are paired
/// uniformly and pairings that contain a loop are rejected and redrawn.
pub fn configuration_multigraph<R: Rng + ?Sized>(rng: &mut R, degrees: &[usize]) -> Result<Multigraph> {
    let total: usize = degrees.iter().sum();
    if total % 2 == 1 {
        return domain("degree sum must be even");
    }
    let mut stubs: Vec<u32> = degrees.iter().enumerate().flat_map(|(v, &d)| std::iter::repeat_n(v as u32, d)).collect();
    for _ in 0..PAIRING_ATTEMPTS {
        stubs.shuffle(rng);
        if stubs.chunks(2).all(|p| p[0] != p[1]) {
            let pairs: Vec<(u32, u32)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
            return Multigraph::from_edges(degrees.len(), &pairs);
        }
    }
    domain("no loopless pairing found for this degree sequence")
}

/// Random `d`-regular loopless multigraph on `n` vertices.
pub fn random_regular_multigraph<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Result<Multigraph> {
    configuration_multigraph(rng, &vec![d; n])
}

/// Configuration-model multigraph whose degrees are drawn from
/// `floor..=ceil`, with one degree bumped when needed to fix the parity.
pub fn random_degree_floor_multigraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    floor: usize,
    ceil: usize,
) -> Result<Multigraph> {
    if n < 2 || floor > ceil {
        return domain("need at least two vertices and floor <= ceil");
    }
    let mut degrees: Vec<usize> = (0..n).map(|_| rng.gen_range(floor..=ceil)).collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        let i = rng.gen_range(0..n);
        degrees[i] += 1;
    }
    configuration_multigraph(rng, &degrees)
}

/// Uniform admissible Z3 boundary.
pub fn random_boundary<R: Rng + ?Sized>(rng: &mut R, g: &Multigraph) -> Z3Boundary {
    let n = g.order();
    let mut values: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
    if let Some(last) = values.last_mut() {
        *last = 0;
        let sum: i64 = values.iter().sum();
        *values.last_mut().expect("nonempty") = (3 - sum % 3) % 3;
    }
    Z3Boundary::from_values(g, &values).expect("balanced by construction")
}

/// Admissible imbalance (zero sum, degree parity). Half of the draws are
/// realised by a random orientation; the rest perturb one by moving 2 units
/// between random vertices a few times, which usually breaks feasibility.
pub fn random_admissible_imbalance<R: Rng + ?Sized>(rng: &mut R, g: &Multigraph) -> ImbalanceSpec {
    let d = g.dense();
    let mut ell = vec![0i64; d.n];
    for &(a, b) in &d.edges {
        if rng.gen_bool(0.5) {
            ell[a] += 1;
            ell[b] -= 1;
        } else {
            ell[a] -= 1;
            ell[b] += 1;
        }
    }
    if d.n >= 2 && rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=3) {
            let a = rng.gen_range(0..d.n);
            let b = (a + rng.gen_range(1..d.n)) % d.n;
            ell[a] += 2;
            ell[b] -= 2;
        }
    }
    ImbalanceSpec::from_values(g, &ell).expect("admissible by construction")
}
