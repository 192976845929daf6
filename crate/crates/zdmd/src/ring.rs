//! Zero divisors of `Z_n` and the zero-divisor graph on them.
//!
//! Vertices are the nonzero zero divisors of `Z_n` in ascending residue
//! order; two distinct residues are adjacent exactly when their product is
//! 0 mod n. Self-annihilating residues do not create loops.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
}

/// The modulus `n >= 2` of the residue ring `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self, RingError> {
        if n >= 2 {
            Ok(Modulus(n))
        } else {
            Err(RingError::InvalidModulus(n))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Ascending list of residues `a` in `1..n` with `gcd(a, n) > 1`, i.e. the
/// nonzero zero divisors of `Z_n`. Empty when `n` is prime.
pub fn zero_divisors(m: Modulus) -> Vec<u64> {
    let n = m.get();
    (1..n).filter(|&a| gcd(a, n) > 1).collect()
}

/// The zero-divisor graph of `Z_n`: vertices are the nonzero zero divisors,
/// labelled by their decimal residue; distinct `a`, `b` are adjacent iff
/// `a * b = 0 (mod n)`.
pub fn zero_divisor_graph(m: Modulus) -> Graph {
    let residues = zero_divisors(m);
    let n = m.get();
    let mut g = Graph::new(residues.len());
    for (i, &a) in residues.iter().enumerate() {
        g.set_label(i, a.to_string()).expect("index in range");
        for (j, &b) in residues.iter().enumerate().skip(i + 1) {
            if (a as u128 * b as u128) % n as u128 == 0 {
                g.add_edge(i, j).expect("indices in range, i != j");
            }
        }
    }
    g
}

/// Residue of each vertex of [`zero_divisor_graph`], by id.
pub fn vertex_residues(m: Modulus) -> Vec<u64> {
    zero_divisors(m)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factors `n = p * q` with `p < q` distinct primes, by trial division.
pub fn semiprime_factors(n: u64) -> Option<(u64, u64)> {
    let mut d = 2;
    while d * d < n {
        if n % d == 0 {
            let other = n / d;
            if is_prime(d) && is_prime(other) && d != other {
                return Some((d, other));
            }
            return None;
        }
        d += 1;
    }
    None
}

/// True iff `g` is the complete bipartite graph with parts given by the
/// multiples of `q` (size `p - 1`) and the multiples of `p` (size `q - 1`),
/// under the ascending-residue vertex order of `zero_divisor_graph(p * q)`.
pub fn validate_kpq_structure(g: &Graph, p: u64, q: u64) -> bool {
    let n = p * q;
    let residues = zero_divisors(Modulus::new(n).expect("pq >= 6"));
    if residues.len() != g.vertex_count() {
        return false;
    }
    let mult_q: Vec<usize> = residues
        .iter()
        .enumerate()
        .filter(|(_, &r)| r % q == 0)
        .map(|(i, _)| i)
        .collect();
    let mult_p: Vec<usize> = residues
        .iter()
        .enumerate()
        .filter(|(_, &r)| r % p == 0)
        .map(|(i, _)| i)
        .collect();
    if mult_q.len() != (p - 1) as usize || mult_p.len() != (q - 1) as usize {
        return false;
    }
    if mult_q.len() + mult_p.len() != g.vertex_count() {
        return false;
    }
    for &u in &mult_q {
        for &v in &mult_p {
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    let expected = mult_q.len() * mult_p.len();
    g.edge_count() == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: a residue is a zero divisor iff some nonzero
    /// partner multiplies with it to 0 mod n.
    fn zero_divisors_brute(n: u64) -> Vec<u64> {
        (1..n)
            .filter(|&a| (1..n).any(|b| (a * b) % n == 0))
            .collect()
    }

    #[test]
    fn zero_divisors_of_6() {
        assert_eq!(zero_divisors(Modulus::new(6).unwrap()), vec![2, 3, 4]);
    }

    #[test]
    fn prime_modulus_has_no_zero_divisors() {
        assert_eq!(zero_divisors(Modulus::new(7).unwrap()), Vec::<u64>::new());
    }

    #[test]
    fn zero_divisors_of_15() {
        assert_eq!(
            zero_divisors(Modulus::new(15).unwrap()),
            vec![3, 5, 6, 9, 10, 12]
        );
    }

    #[test]
    fn gcd_rule_matches_brute_force_up_to_300() {
        for n in 2..=300 {
            assert_eq!(
                zero_divisors(Modulus::new(n).unwrap()),
                zero_divisors_brute(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn graph_of_6_is_a_path() {
        let g = zero_divisor_graph(Modulus::new(6).unwrap());
        // residues [2, 3, 4]: edges 2-3 and 3-4 only
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.is_path_graph());
        assert_eq!(g.label(0), Some("2"));
    }

    #[test]
    fn graph_of_4_is_single_vertex() {
        let g = zero_divisor_graph(Modulus::new(4).unwrap());
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0), Some("2"));
    }

    #[test]
    fn graph_edges_match_pairwise_brute_force() {
        for n in 2..=120u64 {
            let m = Modulus::new(n).unwrap();
            let g = zero_divisor_graph(m);
            let residues = zero_divisors(m);
            for (i, &a) in residues.iter().enumerate() {
                for (j, &b) in residues.iter().enumerate().skip(i + 1) {
                    assert_eq!(g.has_edge(i, j), (a * b) % n == 0, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn connected_for_composite_moduli_up_to_300() {
        for n in 2..=300 {
            let g = zero_divisor_graph(Modulus::new(n).unwrap());
            if g.vertex_count() >= 2 {
                assert!(g.is_connected(), "n = {n}");
            }
        }
    }

    #[test]
    fn semiprime_structure() {
        for (p, q) in [(2, 3), (2, 7), (3, 5), (3, 7), (5, 7), (5, 11)] {
            let g = zero_divisor_graph(Modulus::new(p * q).unwrap());
            assert_eq!(g.vertex_count() as u64, p + q - 2);
            assert!(validate_kpq_structure(&g, p, q), "p={p} q={q}");
            let residues = zero_divisors(Modulus::new(p * q).unwrap());
            for (i, &r) in residues.iter().enumerate() {
                let expected = if r % q == 0 { q - 1 } else { p - 1 };
                assert_eq!(g.degree(i) as u64, expected);
            }
        }
    }

    #[test]
    fn kpq_validation_rejects_wrong_shapes() {
        let g = zero_divisor_graph(Modulus::new(15).unwrap());
        assert!(validate_kpq_structure(&g, 3, 5));
        // wrong modulus: vertex counts disagree
        assert!(!validate_kpq_structure(&g, 3, 7));
        // same part layout as Z_15 but one cross edge missing
        let broken = Graph::from_edge_list(
            6,
            [(1, 0), (1, 2), (1, 3), (1, 5), (4, 0), (4, 2), (4, 3)],
        )
        .unwrap();
        assert!(!validate_kpq_structure(&broken, 3, 5));
    }

    #[test]
    fn factorization() {
        assert_eq!(semiprime_factors(77), Some((7, 11)));
        assert_eq!(semiprime_factors(6), Some((2, 3)));
        assert_eq!(semiprime_factors(8), None);
        assert_eq!(semiprime_factors(9), None);
        assert_eq!(semiprime_factors(7), None);
        assert_eq!(semiprime_factors(4), None);
        assert_eq!(semiprime_factors(2), None);
    }

    #[test]
    fn modulus_bounds() {
        assert!(Modulus::new(1).is_err());
        assert!(Modulus::new(2).is_ok());
    }
}
