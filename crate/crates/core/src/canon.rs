//! Canonical labeling by iterative color refinement with individualization
//! backtracking; the canonical form is the lexicographically least adjacency
//! bit-string over all refinement leaves. Complete at the orders used here
//! (censuses run at n <= 9, product confirmations at n <= 12).

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_CANON_ORDER: usize = 16;

/// Canonical representative of an isomorphism class. Two graphs are
/// isomorphic iff their canonical edge lists (and orders) are equal.
/// `perm[v-1]` is the canonical label of input vertex `v`; applying it to the
/// input edge list reproduces `edges`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CanonicalForm {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub perm: Vec<usize>,
}

impl CanonicalForm {
    /// Upper-triangle bit key (column-major), usable as a dedup key for
    /// n <= 11.
    pub fn bit_key(&self) -> u64 {
        debug_assert!(self.order <= 11);
        let mut key = 0u64;
        for &(a, b) in &self.edges {
            key |= 1 << tri_index(a, b);
        }
        key
    }
}

fn tri_index(a: usize, b: usize) -> usize {
    // (a,b) with a < b, 1-based: column-major upper triangle.
    (b - 1) * (b - 2) / 2 + (a - 1)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.is_weighted() {
        return Err(Error::invalid(
            "canonical_form is defined for unweighted graphs; use is_isomorphic for weighted",
        ));
    }
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::invalid(format!(
            "canonical labeling supports order <= {MAX_CANON_ORDER}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(CanonicalForm {
            order: 0,
            edges: vec![],
            perm: vec![],
        });
    }
    let mut rows = vec![0u16; n];
    for &(a, b) in g.edges() {
        rows[a - 1] |= 1 << (b - 1);
        rows[b - 1] |= 1 << (a - 1);
    }
    let mut best: Option<(Vec<u16>, Vec<usize>)> = None;
    search(&rows, vec![0; n], &mut best);
    let (_, labels) = best.expect("search visits at least one leaf");
    let perm: Vec<usize> = labels.iter().map(|&l| l + 1).collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a - 1], perm[b - 1]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    Ok(CanonicalForm {
        order: n,
        edges,
        perm,
    })
}

/// Stable color refinement: split classes by neighbor-count profiles until
/// the partition stops changing.
fn refine(rows: &[u16], colors: &mut [u32]) {
    let n = rows.len();
    loop {
        let ncolors = *colors.iter().max().unwrap() as usize + 1;
        let mut masks = vec![0u16; ncolors];
        for v in 0..n {
            masks[colors[v] as usize] |= 1 << v;
        }
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut sig = Vec::with_capacity(ncolors + 1);
                sig.push(colors[v]);
                for m in &masks {
                    sig.push((rows[v] & m).count_ones());
                }
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                next += 1;
            }
            new_colors[sigs[i].1] = next;
        }
        let new_count = next as usize + 1;
        colors.copy_from_slice(&new_colors);
        if new_count == ncolors {
            return;
        }
    }
}

fn search(rows: &[u16], mut colors: Vec<u32>, best: &mut Option<(Vec<u16>, Vec<usize>)>) {
    let n = rows.len();
    refine(rows, &mut colors);
    let ncolors = *colors.iter().max().unwrap() as usize + 1;
    if ncolors == n {
        // Discrete: vertex with color c receives canonical label c.
        let labels: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut canon_rows = vec![0u16; n];
        for v in 0..n {
            let mut row = 0u16;
            for w in 0..n {
                if rows[v] & (1 << w) != 0 {
                    row |= 1 << labels[w];
                }
            }
            canon_rows[labels[v]] = row;
        }
        match best {
            Some((key, _)) if *key <= canon_rows => {}
            _ => *best = Some((canon_rows, labels)),
        }
        return;
    }
    // Target: the smallest non-singleton cell, earliest color on ties.
    let mut sizes = vec![0usize; ncolors];
    for &c in colors.iter() {
        sizes[c as usize] += 1;
    }
    let target = (0..ncolors)
        .filter(|&c| sizes[c] >= 2)
        .min_by_key(|&c| (sizes[c], c))
        .expect("non-discrete partition has a non-singleton cell") as u32;
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let child: Vec<u32> = (0..n)
            .map(|u| {
                if colors[u] < target || (u == v && colors[u] == target) {
                    colors[u]
                } else {
                    colors[u] + 1
                }
            })
            .collect();
        search(rows, child, best);
    }
}

/// Edge-preserving (and weight-preserving) bijection test. Unweighted graphs
/// within the canonical-order limit go through `canonical_form`; weighted or
/// larger graphs use backtracking with degree pruning.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return false;
    }
    if !g1.is_weighted() && !g2.is_weighted() && g1.order() <= MAX_CANON_ORDER {
        let c1 = canonical_form(g1).expect("checked unweighted and small");
        let c2 = canonical_form(g2).expect("checked unweighted and small");
        return c1.edges == c2.edges;
    }
    backtrack_iso(g1, g2)
}

fn backtrack_iso(g1: &Graph, g2: &Graph) -> bool {
    let n = g1.order();
    let mut mapping = vec![0usize; n]; // g1 vertex v -> g2 vertex mapping[v-1]
    let mut used = vec![false; n];
    fn go(g1: &Graph, g2: &Graph, v: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
        let n = g1.order();
        if v > n {
            return true;
        }
        for w in 1..=n {
            if used[w - 1] || g1.degree(v) != g2.degree(w) {
                continue;
            }
            let consistent = (1..v).all(|u| g1.weight(v, u) == g2.weight(w, mapping[u - 1]));
            if consistent {
                mapping[v - 1] = w;
                used[w - 1] = true;
                if go(g1, g2, v + 1, mapping, used) {
                    return true;
                }
                used[w - 1] = false;
            }
        }
        false
    }
    go(g1, g2, 1, &mut mapping, &mut used)
}
