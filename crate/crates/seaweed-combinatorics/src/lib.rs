//! Index statistic of partitions via meander graphs.
//!
//! A pair of partitions (lambda, mu) of the same n determines a meander
//! graph on vertices 1..n: the blocks of lambda are laid left to right on
//! top and connected by nested arcs (the i-th vertex of a block of size s is
//! joined to the (s+1-i)-th for i < (s+1)/2), and the blocks of mu do the
//! same on the bottom.  Every vertex meets at most one top arc and at most
//! one bottom arc, so each connected component is a simple path or a simple
//! cycle, and the index of the associated matrix algebra is
//!
//!   index = 2 * (number of cycles) + (number of paths),
//!
//! isolated vertices counting as paths.  Calibration: the pair ({n}, {n})
//! stacks identical arcs top and bottom, giving floor(n/2) two-vertex cycles
//! plus (n mod 2) isolated middle vertices, hence index n, the index of the
//! full matrix algebra gl(n).
//!
//! The statistic of interest downstream is the parity of the index of
//! (lambda, {n}) as lambda ranges over partitions of n into odd parts: with
//! e_n partitions of even index and o_n of odd index, |e_n - o_n| equals the
//! n-th coefficient of prod_{k>=0} 1/((1-q^{4k+1})(1+q^{4k+3})), which
//! `verify_part2` checks against the series engine for every n up to a
//! requested bound.

use num_bigint::BigInt;
use num_traits::Signed;
use series_engine::expand_g;

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum SeaweedError {
    #[error("partition parts must be positive and non-increasing")]
    MalformedPartition,
    #[error("partitions sum to {left} and {right}, not the same n")]
    SumMismatch { left: usize, right: usize },
}

/// Partition of n: non-increasing positive parts (empty only for n = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SeaweedError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SeaweedError::MalformedPartition);
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The one-block partition {n}.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Partition { parts: vec![], n: 0 }
        } else {
            Partition { parts: vec![n], n }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

/// Meander graph on vertices 0..n (internally zero-based): `top[v]` and
/// `bottom[v]` hold the unique arc partner of v on that side, if any.
#[derive(Clone, Debug)]
pub struct MeanderGraph {
    n: usize,
    top: Vec<Option<usize>>,
    bottom: Vec<Option<usize>>,
}

fn lay_arcs(arcs: &mut [Option<usize>], parts: &[usize]) {
    let mut offset = 0;
    for &s in parts {
        // nested pairing: i-th with (s+1-i)-th vertex of the block, 1-based
        for i in 1..=s / 2 {
            let a = offset + i - 1;
            let b = offset + s - i;
            arcs[a] = Some(b);
            arcs[b] = Some(a);
        }
        offset += s;
    }
}

pub fn build_meander(lambda: &Partition, mu: &Partition) -> Result<MeanderGraph, SeaweedError> {
    if lambda.n() != mu.n() {
        return Err(SeaweedError::SumMismatch {
            left: lambda.n(),
            right: mu.n(),
        });
    }
    let n = lambda.n();
    let mut top = vec![None; n];
    let mut bottom = vec![None; n];
    lay_arcs(&mut top, lambda.parts());
    lay_arcs(&mut bottom, mu.parts());
    Ok(MeanderGraph { n, top, bottom })
}

impl MeanderGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_arc(&self, v: usize) -> Option<usize> {
        self.top[v]
    }

    pub fn bottom_arc(&self, v: usize) -> Option<usize> {
        self.bottom[v]
    }

    /// (cycles, paths). Degree <= 2 everywhere, so a component is a cycle
    /// exactly when its edge count (with top/bottom multiplicity) equals its
    /// vertex count; an isolated vertex is a one-vertex path.
    pub fn component_counts(&self) -> (usize, usize) {
        let mut seen = vec![false; self.n];
        let mut cycles = 0;
        let mut paths = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut vertices = 0usize;
            let mut endpoint_degree = 0usize; // sum of degrees over component
            while let Some(v) = stack.pop() {
                vertices += 1;
                for link in [self.top[v], self.bottom[v]] {
                    if let Some(w) = link {
                        endpoint_degree += 1;
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            let edges = endpoint_degree / 2;
            if edges == vertices {
                cycles += 1;
            } else {
                debug_assert_eq!(edges + 1, vertices);
                paths += 1;
            }
        }
        (cycles, paths)
    }
}

/// Dergachev-Kirillov index of the seaweed pair behind the graph: 2C + P.
pub fn seaweed_index(g: &MeanderGraph) -> usize {
    let (cycles, paths) = g.component_counts();
    2 * cycles + paths
}

/// All partitions of n into odd parts, lexicographically descending.
pub fn odd_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    // largest odd part <= n
    let max_part = if n == 0 { 1 } else { n - (1 - n % 2) };
    descend(n, max_part, &mut current, &mut out);
    out
}

fn descend(rem: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        let parts = current.clone();
        let n = parts.iter().sum();
        out.push(Partition { parts, n });
        return;
    }
    let mut p = max_part.min(rem);
    if p % 2 == 0 {
        p -= 1;
    }
    while p >= 1 {
        current.push(p);
        descend(rem - p, p, current, out);
        current.pop();
        if p == 1 {
            break;
        }
        p -= 2;
    }
}

/// Partitions of n into odd parts, split by parity of the index of
/// (lambda, {n}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityCounts {
    pub e: usize,
    pub o: usize,
}

pub fn parity_counts(n: usize) -> ParityCounts {
    let mu = Partition::single(n);
    let mut counts = ParityCounts { e: 0, o: 0 };
    for lambda in odd_partitions(n) {
        let g = build_meander(&lambda, &mu).expect("same n by construction");
        if seaweed_index(&g) % 2 == 0 {
            counts.e += 1;
        } else {
            counts.o += 1;
        }
    }
    counts
}

/// One row of the desk-scale confrontation of |e_n - o_n| with the series
/// coefficient a(n).
#[derive(Clone, Debug)]
pub struct Part2Row {
    pub n: usize,
    pub e: usize,
    pub o: usize,
    pub a: BigInt,
    pub matches: bool,
}

/// For each 1 <= n <= n_max, compare |e_n - o_n| against a(n) from the
/// series engine. The overall claim holds iff every row matches.
pub fn verify_part2(n_max: usize) -> Vec<Part2Row> {
    let g = expand_g(n_max);
    (1..=n_max)
        .map(|n| {
            let ParityCounts { e, o } = parity_counts(n);
            let gap = BigInt::from(e as i64 - o as i64).abs();
            let a = g.coeff(n).clone();
            let matches = gap == a;
            Part2Row { n, e, o, a, matches }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert_eq!(
            Partition::new(vec![1, 3]),
            Err(SeaweedError::MalformedPartition)
        );
        assert_eq!(
            Partition::new(vec![2, 0]),
            Err(SeaweedError::MalformedPartition)
        );
        assert_eq!(Partition::new(vec![]).unwrap().n(), 0);
    }

    #[test]
    fn meander_hand_examples() {
        // {1,1,1} vs {3}: bottom arc 1-3 only; components are the path 1-3
        // and the isolated vertex 2
        let g = build_meander(&part(&[1, 1, 1]), &part(&[3])).unwrap();
        assert_eq!(g.top_arc(0), None);
        assert_eq!(g.bottom_arc(0), Some(2));
        assert_eq!(g.bottom_arc(1), None);
        assert_eq!(g.component_counts(), (0, 2));
        assert_eq!(seaweed_index(&g), 2);

        // {3} vs {3}: arcs 1-3 on both sides make a two-vertex cycle
        let g = build_meander(&part(&[3]), &part(&[3])).unwrap();
        assert_eq!(g.component_counts(), (1, 1));
        assert_eq!(seaweed_index(&g), 3);

        // {3,1,1} vs {5}: top 1-3; bottom 1-5 and 2-4; paths 3-1-5 and 2-4
        let g = build_meander(&part(&[3, 1, 1]), &part(&[5])).unwrap();
        assert_eq!(g.component_counts(), (0, 2));
        assert_eq!(seaweed_index(&g), 2);

        // {1} vs {1}: single isolated vertex
        let g = build_meander(&part(&[1]), &part(&[1])).unwrap();
        assert_eq!(g.component_counts(), (0, 1));
        assert_eq!(seaweed_index(&g), 1);
    }

    #[test]
    fn sum_mismatch_rejected() {
        let err = build_meander(&part(&[3]), &part(&[4])).unwrap_err();
        assert_eq!(err, SeaweedError::SumMismatch { left: 3, right: 4 });
    }

    #[test]
    fn odd_partition_small_lists() {
        let p0 = odd_partitions(0);
        assert_eq!(p0.len(), 1);
        assert!(p0[0].parts().is_empty());

        let p5: Vec<Vec<usize>> = odd_partitions(5)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(p5, vec![vec![5], vec![3, 1, 1], vec![1, 1, 1, 1, 1]]);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_counts(1), ParityCounts { e: 0, o: 1 });
        assert_eq!(parity_counts(3), ParityCounts { e: 1, o: 1 });
        assert_eq!(parity_counts(5), ParityCounts { e: 1, o: 2 });
    }
}
