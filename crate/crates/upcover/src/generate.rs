//! Deterministic generators: De Bruijn cycles, alternating De Bruijn cycles,
//! and (a,1,k)-perfect necklaces. De Bruijn generation runs Hierholzer's
//! algorithm with smallest-edge-first tie-breaking and rotates the result to
//! its lexicographically least representation, so outputs are reproducible.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{Alphabet, CyclicPartialWord, Symbol};

/// Eulerian circuit on a graph given by out-edges per vertex. Edges from each
/// vertex are consumed in the order provided (callers sort them smallest
/// first). Returns the edge labels along the circuit starting at vertex 0.
fn hierholzer<L: Copy>(edges: &[Vec<(usize, L)>]) -> Vec<L> {
    let total: usize = edges.iter().map(|e| e.len()).sum();
    let mut next = vec![0usize; edges.len()];
    let mut vertex_stack = vec![0usize];
    let mut edge_stack: Vec<L> = Vec::new();
    let mut circuit: Vec<L> = Vec::with_capacity(total);
    while let Some(&v) = vertex_stack.last() {
        if next[v] < edges[v].len() {
            let (to, label) = edges[v][next[v]];
            next[v] += 1;
            vertex_stack.push(to);
            edge_stack.push(label);
        } else {
            vertex_stack.pop();
            if let Some(label) = edge_stack.pop() {
                circuit.push(label);
            }
        }
    }
    circuit.reverse();
    circuit
}

/// Index of the lexicographically least rotation (Booth's algorithm,
/// quadratic variant; all inputs here are desk scale).
fn least_rotation_index<T: Ord>(seq: &[T]) -> usize {
    let n = seq.len();
    let mut best = 0;
    for i in 1..n {
        for j in 0..n {
            let a = &seq[(best + j) % n];
            let b = &seq[(i + j) % n];
            if b < a {
                best = i;
                break;
            }
            if b > a {
                break;
            }
        }
    }
    best
}

/// A De Bruijn cycle for {0..a-1}^n as a sequence of indices. This form has
/// no alphabet-size cap and backs the rotation sequences fed to the torus
/// constructions.
pub fn debruijn_indices(a: usize, n: usize) -> Vec<u32> {
    assert!(a >= 1 && n >= 1);
    if a == 1 {
        return vec![0];
    }
    // Vertices are words of length n-1; edge labels are appended letters.
    let verts = a.pow(n as u32 - 1);
    let edges: Vec<Vec<(usize, u32)>> = (0..verts)
        .map(|v| (0..a).map(|c| ((v * a + c) % verts, c as u32)).collect())
        .collect();
    let mut cycle = hierholzer(&edges);
    debug_assert_eq!(cycle.len(), a.pow(n as u32));
    let start = least_rotation_index(&cycle);
    cycle.rotate_left(start);
    cycle
}

/// Exact-once coverage check for an index sequence, using a hash ledger so
/// that alphabets beyond the symbol-rendering cap still verify.
pub fn is_debruijn_indices(seq: &[u32], a: usize, n: usize) -> bool {
    if seq.len() != a.pow(n as u32) || seq.iter().any(|&v| v as usize >= a) {
        return false;
    }
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    for i in 0..seq.len() {
        let word: Vec<u32> = (0..n).map(|j| seq[(i + j) % seq.len()]).collect();
        *seen.entry(word).or_insert(0) += 1;
    }
    seen.len() == a.pow(n as u32) && seen.values().all(|&c| c == 1)
}

/// A De Bruijn cycle as a total cyclic word, for alphabets that render.
pub fn debruijn_cycle(a: u32, n: usize) -> Result<CyclicPartialWord> {
    let alphabet = Alphabet::new(a)?;
    let symbols = debruijn_indices(a as usize, n)
        .into_iter()
        .map(|v| Symbol::Letter(v as u8))
        .collect();
    CyclicPartialWord::new(symbols, alphabet)
}

/// Counts De Bruijn cycles for {0..a-1}^n by checking every string of length
/// a^n and dividing rotation classes out. Desk scale only.
pub fn count_debruijn_bruteforce(a: u32, n: usize) -> Result<u64> {
    let len = (a as u64).checked_pow(n as u32).ok_or_else(|| {
        Error::TooLarge(format!("{a}^{n} overflows"))
    })?;
    if len > 16 {
        return Err(Error::TooLarge(format!("a^n = {len} exceeds 16")));
    }
    let strings = (a as u128).pow(len as u32);
    if strings > 1 << 24 {
        return Err(Error::TooLarge(format!("{a}^{len} candidate strings")));
    }
    let mut hits = 0u64;
    let mut seq = vec![0u32; len as usize];
    for mut k in 0..strings {
        for slot in seq.iter_mut() {
            *slot = (k % a as u128) as u32;
            k /= a as u128;
        }
        if is_debruijn_indices(&seq, a as usize, n) {
            hits += 1;
        }
    }
    Ok(hits / len)
}

/// Cyclic interleaving a_0 b_0 a_1 b_1 ... of two index alphabets. Items at
/// even positions come from A, at odd positions from B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycle {
    pub a_items: Vec<u32>,
    pub b_items: Vec<u32>,
    /// Order 2n+1 of the alternating words the cycle covers.
    pub order: usize,
}

impl AlternatingCycle {
    pub fn len(&self) -> usize {
        2 * self.a_items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_items.is_empty()
    }

    /// The alternating word of the cycle's order at A-position i.
    pub fn word_at(&self, i: usize) -> (Vec<u32>, Vec<u32>) {
        let n = (self.order - 1) / 2;
        let v = self.a_items.len();
        let a: Vec<u32> = (0..=n).map(|j| self.a_items[(i + j) % v]).collect();
        let b: Vec<u32> = (0..n).map(|j| self.b_items[(i + j) % v]).collect();
        (a, b)
    }
}

/// Linear form f_0 r_0 f_1 ... r_{v-1} f_v with f_v = f_0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrolledAlternating {
    pub a_items: Vec<u32>,
    pub b_items: Vec<u32>,
    pub order: usize,
}

/// An alternating De Bruijn cycle of order 2n+1 on index alphabets of the
/// given sizes, built as an Eulerian circuit with smallest-(b,a)-first
/// tie-breaking.
pub fn alternating_debruijn(size_a: usize, size_b: usize, n: usize) -> AlternatingCycle {
    assert!(size_a >= 1 && size_b >= 1 && n >= 1);
    // Vertices are alternating words of length 2n-1 (n A-items, n-1 B-items),
    // encoded mixed-radix with the leading A-item most significant.
    let verts = size_a.pow(n as u32) * size_b.pow(n as u32 - 1);
    let decode = |mut v: usize| -> (Vec<u32>, Vec<u32>) {
        let mut a = vec![0u32; n];
        let mut b = vec![0u32; n - 1];
        for i in (0..n - 1).rev() {
            b[i] = (v % size_b) as u32;
            v /= size_b;
        }
        for i in (0..n).rev() {
            a[i] = (v % size_a) as u32;
            v /= size_a;
        }
        (a, b)
    };
    let encode = |a: &[u32], b: &[u32]| -> usize {
        let mut v = 0usize;
        for &x in a {
            v = v * size_a + x as usize;
        }
        for &x in b {
            v = v * size_b + x as usize;
        }
        v
    };
    let edges: Vec<Vec<(usize, (u32, u32))>> = (0..verts)
        .map(|v| {
            let (a, b) = decode(v);
            let mut out = Vec::with_capacity(size_b * size_a);
            for nb in 0..size_b as u32 {
                for na in 0..size_a as u32 {
                    let mut a2: Vec<u32> = a[1..].to_vec();
                    a2.push(na);
                    let mut b2: Vec<u32> = b.get(1..).unwrap_or(&[]).to_vec();
                    if n >= 2 {
                        b2.push(nb);
                    }
                    out.push((encode(&a2, &b2), (nb, na)));
                }
            }
            out
        })
        .collect();
    let circuit = hierholzer(&edges);
    let e = circuit.len();
    debug_assert_eq!(e, size_a.pow(n as u32 + 1) * size_b.pow(n as u32));
    // Edge i supplies the items at stream positions n+i (A) and n-1+i (B);
    // starting at vertex 0 (the all-zero word) keeps the prefix consistent.
    let mut a_items = vec![0u32; e];
    let mut b_items = vec![0u32; e];
    for (i, &(b, a)) in circuit.iter().enumerate() {
        a_items[(i + n) % e] = a;
        b_items[(i + n - 1) % e] = b;
    }
    AlternatingCycle {
        a_items,
        b_items,
        order: 2 * n + 1,
    }
}

/// Appends the initial A-item to the end, producing the linear sequence the
/// family construction consumes.
pub fn unroll_alternating(c: &AlternatingCycle) -> UnrolledAlternating {
    let mut a_items = c.a_items.clone();
    a_items.push(c.a_items[0]);
    UnrolledAlternating {
        a_items,
        b_items: c.b_items.clone(),
        order: c.order,
    }
}

/// The (a,1,k)-perfect necklace 0^k 1^k ... (a-1)^k.
pub fn perfect_necklace(a: u32, k: usize) -> Result<CyclicPartialWord> {
    let alphabet = Alphabet::new(a)?;
    let symbols = (0..a as u8)
        .flat_map(|letter| std::iter::repeat(Symbol::Letter(letter)).take(k))
        .collect();
    CyclicPartialWord::new(symbols, alphabet)
}

/// Perfect necklace as raw indices, for alphabets past the rendering cap.
pub fn perfect_necklace_indices(a: usize, k: usize) -> Vec<u32> {
    (0..a as u32)
        .flat_map(|letter| std::iter::repeat(letter).take(k))
        .collect()
}

/// Exact-once occurrence scan for alternating cycles: every alternating word
/// of the cycle's order occurs at exactly one A-position.
pub fn verify_alternating(c: &AlternatingCycle, size_a: usize, size_b: usize) -> bool {
    let n = (c.order - 1) / 2;
    let expected = size_a.pow(n as u32 + 1) * size_b.pow(n as u32);
    if c.a_items.len() != expected || c.b_items.len() != expected {
        return false;
    }
    let mut seen: HashMap<(Vec<u32>, Vec<u32>), usize> = HashMap::new();
    for i in 0..c.a_items.len() {
        *seen.entry(c.word_at(i)).or_insert(0) += 1;
    }
    seen.len() == expected && seen.values().all(|&v| v == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::verify_upcycle;

    #[test]
    fn debruijn_small_cases() {
        let c = debruijn_cycle(2, 2).unwrap();
        assert_eq!(c.to_text(), "0011");
        for (a, n) in [(2, 4), (8, 2)] {
            let c = debruijn_cycle(a, n).unwrap();
            assert_eq!(c.len(), (a as usize).pow(n as u32));
            let report = verify_upcycle(&c, n).unwrap();
            assert!(report.valid);
            assert_eq!(report.diamondicity, Some(0));
        }
        let c = debruijn_cycle(1, 3).unwrap();
        assert_eq!(c.to_text(), "0");
    }

    #[test]
    fn debruijn_output_is_least_rotation() {
        let seq = debruijn_indices(2, 4);
        assert_eq!(least_rotation_index(&seq), 0);
    }

    #[test]
    fn debruijn_counting() {
        assert_eq!(count_debruijn_bruteforce(2, 2).unwrap(), 1);
        assert_eq!(count_debruijn_bruteforce(2, 3).unwrap(), 2);
        assert_eq!(count_debruijn_bruteforce(3, 1).unwrap(), 2);
        assert!(matches!(
            count_debruijn_bruteforce(2, 5),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn alternating_small_cases() {
        let c = alternating_debruijn(2, 2, 1);
        assert_eq!(c.len(), 16);
        assert!(verify_alternating(&c, 2, 2));

        let c = alternating_debruijn(1, 1, 1);
        assert_eq!(c.len(), 2);
        assert!(verify_alternating(&c, 1, 1));

        let c = alternating_debruijn(2, 3, 2);
        assert!(verify_alternating(&c, 2, 3));
    }

    #[test]
    fn alternating_b_frequency() {
        // Each B value occurs |A|^{n+1} |B|^{n-1} times.
        let (size_a, size_b, n) = (3usize, 2usize, 2usize);
        let c = alternating_debruijn(size_a, size_b, n);
        let expected = size_a.pow(n as u32 + 1) * size_b.pow(n as u32 - 1);
        for v in 0..size_b as u32 {
            assert_eq!(
                c.b_items.iter().filter(|&&x| x == v).count(),
                expected
            );
        }
    }

    #[test]
    fn unroll_examples() {
        let c = alternating_debruijn(2, 2, 1);
        let u = unroll_alternating(&c);
        assert_eq!(u.a_items.len(), 9);
        assert_eq!(u.a_items.first(), u.a_items.last());
        assert_eq!(u.b_items.len(), 8);
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(perfect_necklace(4, 2).unwrap().to_text(), "00112233");
        assert_eq!(perfect_necklace(2, 1).unwrap().to_text(), "01");
        assert_eq!(perfect_necklace(3, 3).unwrap().to_text(), "000111222");
        // Residue structure: positions congruent mod k hold each letter once.
        let v = perfect_necklace(4, 2).unwrap();
        for j in 0..2 {
            let mut letters: Vec<_> = (0..4)
                .map(|block| v.symbols()[(block * 2 + j) as usize])
                .collect();
            letters.sort();
            letters.dedup();
            assert_eq!(letters.len(), 4);
        }
    }
}
