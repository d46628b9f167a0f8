//! Labeled trees on `{0, 1, …, n}` rooted at `0` and the inversion
//! enumerator `I_n(q) = Σ_T q^{inv(T)}`.

use rayon::prelude::*;

use crate::parking::UniPoly;
use crate::{Cap, Error, Result};

/// A tree on `{0, …, n}` rooted at `0`, stored as a parent map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    /// `parent[v]` for `v ≥ 1`; `parent[0]` is unused and kept at 0.
    parent: Vec<usize>,
}

impl LabeledTree {
    /// Validate a parent map given for vertices `1..=n` (`parents[v-1]` is the
    /// parent of `v`).
    pub fn from_parents(parents: &[usize]) -> Result<Self> {
        let n = parents.len();
        let mut parent = Vec::with_capacity(n + 1);
        parent.push(0);
        parent.extend_from_slice(parents);
        for (v, &p) in parent.iter().enumerate().skip(1) {
            if p > n || p == v {
                return Err(Error::InvalidTree(format!("bad parent {p} of {v}")));
            }
        }
        let tree = LabeledTree { parent };
        for v in 1..=n {
            let mut u = v;
            let mut steps = 0;
            while u != 0 {
                u = tree.parent[u];
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidTree(format!("cycle through {v}")));
                }
            }
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn parent(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n(), "vertex {v} has no parent");
        self.parent[v]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent[1..]
    }

    /// Decode a Prüfer sequence over `{0, …, n}` (length `n - 1`) and orient
    /// the tree towards `0`.
    pub fn from_prufer(seq: &[usize], n: usize) -> Result<Self> {
        if n == 0 || seq.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "Prüfer sequence of length {} does not describe a tree on 0..={n}",
                seq.len()
            )));
        }
        if let Some(&bad) = seq.iter().find(|&&x| x > n) {
            return Err(Error::InvalidTree(format!("label {bad} out of range")));
        }
        Ok(LabeledTree {
            parent: decode_rooted(seq, n),
        })
    }
}

// Linear-time Prüfer decoding; edges are oriented afterwards by walking from 0.
fn decode_rooted(seq: &[usize], n: usize) -> Vec<usize> {
    let vertices = n + 1;
    let mut degree = vec![1usize; vertices];
    for &x in seq {
        degree[x] += 1;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        adj[leaf].push(x);
        adj[x].push(leaf);
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // The last edge joins the remaining leaf to the largest vertex.
    adj[leaf].push(n);
    adj[n].push(leaf);

    let mut parent = vec![0usize; vertices];
    let mut seen = vec![false; vertices];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    parent
}

/// `#{ (i, j) : i > j ≥ 1, j a strict descendant of i }`, one upward walk
/// per vertex.
pub fn inversions(tree: &LabeledTree) -> usize {
    let mut count = 0;
    for j in 1..=tree.n() {
        let mut u = tree.parent[j];
        while u != 0 {
            if u > j {
                count += 1;
            }
            u = tree.parent[u];
        }
    }
    count
}

/// All `(n+1)^{n-1}` trees, from Prüfer sequences in lexicographic order.
#[derive(Debug, Clone)]
pub struct Trees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Trees {
    fn advance(&mut self) {
        for x in self.seq.iter_mut().rev() {
            if *x < self.n {
                *x += 1;
                return;
            }
            *x = 0;
        }
        self.done = true;
    }
}

impl Iterator for Trees {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        if self.done {
            return None;
        }
        let tree = LabeledTree {
            parent: decode_rooted(&self.seq, self.n),
        };
        self.advance();
        Some(tree)
    }
}

pub fn enumerate_trees(n: usize, cap: Cap) -> Result<Trees> {
    cap.check(n)?;
    if n == 0 {
        return Err(Error::InvalidTree(
            "need at least one non-root vertex".into(),
        ));
    }
    Ok(Trees {
        n,
        seq: vec![0; n - 1],
        done: false,
    })
}

/// `Σ_T q^{inv(T)}`, split across threads by the first Prüfer entry.
pub fn inversion_enumerator_via_trees(n: usize, cap: Cap) -> Result<UniPoly> {
    cap.check(n)?;
    if n == 0 {
        return Err(Error::InvalidTree(
            "need at least one non-root vertex".into(),
        ));
    }
    let max_inv = n * (n - 1) / 2;
    if n == 1 {
        return Ok(UniPoly::from_counts(&[1]));
    }
    let counts = (0..=n)
        .into_par_iter()
        .map(|head| {
            let mut counts = vec![0u64; max_inv + 1];
            let mut tail = Trees {
                n,
                seq: vec![0; n - 2],
                done: false,
            };
            let mut seq = vec![head; n - 1];
            loop {
                if tail.done {
                    break;
                }
                seq[1..].copy_from_slice(&tail.seq);
                let tree = LabeledTree {
                    parent: decode_rooted(&seq, n),
                };
                counts[inversions(&tree)] += 1;
                tail.advance();
            }
            counts
        })
        .reduce(
            || vec![0u64; max_inv + 1],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        );
    Ok(UniPoly::from_counts(&counts))
}
