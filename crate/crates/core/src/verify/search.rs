//! Exact maximum code search on tiny parameters.
//!
//! Two strings conflict when some received string is reachable from both
//! under different count vectors (or, for block-by-block decodable codes,
//! when some block window at the true block start reads as two different
//! counts). A code is valid iff it is an independent set of the conflict
//! graph, after dropping strings that conflict with themselves.

use std::collections::HashMap;
use std::time::Instant;

use crate::bits::BitString;
use crate::error::{Error, Result};

use super::bounds::bounds;
use super::report::{ReportKind, ReportParams, VerificationReport};
use super::validity::{check_shape, scenarios};

/// Largest `n` accepted by [`max_code_search`].
pub const MAX_SEARCH_BITS: usize = 12;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }
    fn and_len(&self, o: &Bits) -> usize {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    k * 64 + t
                })
            })
        })
    }
}

/// Maximum independent set by branch and bound. Branches on the vertex of
/// highest degree within the candidate set (include first, then exclude);
/// prunes with a greedy clique cover of the candidates.
struct Mis<'a> {
    adj: &'a [Bits],
    nodes: u64,
}

impl Mis<'_> {
    fn clique_cover(&self, p: &Bits) -> usize {
        // each class keeps the common neighbourhood of its members
        let mut classes: Vec<Bits> = Vec::new();
        for v in p.iter() {
            match classes.iter_mut().find(|c| c.contains(v)) {
                Some(c) => *c = c.and(&self.adj[v]),
                None => classes.push(self.adj[v].clone()),
            }
        }
        classes.len()
    }

    /// Largest independent set inside `p` that beats `floor`, stopping as
    /// soon as one of size `stop` is found.
    fn solve(&mut self, p: Bits, floor: usize, stop: usize) -> Option<Vec<usize>> {
        let mut best = None;
        let mut best_len = floor;
        let mut cur = Vec::new();
        self.go(p, &mut cur, &mut best, &mut best_len, stop);
        best
    }

    fn go(
        &mut self,
        mut p: Bits,
        cur: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
        best_len: &mut usize,
        stop: usize,
    ) {
        self.nodes += 1;
        if *best_len >= stop {
            return;
        }
        if cur.len() + p.len() <= *best_len || cur.len() + self.clique_cover(&p) <= *best_len {
            return;
        }
        let mut pick = None;
        for v in p.iter() {
            let d = self.adj[v].and_len(&p);
            if pick.map_or(true, |(_, bd)| d > bd) {
                pick = Some((v, d));
            }
        }
        let (v, d) = pick.unwrap_or((usize::MAX, 0));
        if d == 0 {
            let base = cur.len();
            cur.extend(p.iter());
            if cur.len() > *best_len {
                *best_len = cur.len();
                *best = Some(cur.clone());
            }
            cur.truncate(base);
            return;
        }
        cur.push(v);
        let mut with = p.and_not(&self.adj[v]);
        with.remove(v);
        self.go(with, cur, best, best_len, stop);
        cur.pop();
        p.remove(v);
        self.go(p, cur, best, best_len, stop);
    }
}

fn add_edges<K: std::hash::Hash + Eq>(
    groups: HashMap<K, Vec<(usize, Vec<usize>)>>,
    adj: &mut [Bits],
) {
    for (_, mut entries) in groups {
        entries.sort();
        entries.dedup();
        for a in 0..entries.len() {
            for b in a + 1..entries.len() {
                let (u, ref cu) = entries[a];
                let (v, ref cv) = entries[b];
                if u != v && cu != cv {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
    }
}

/// Exact size of the largest code of length `n` that detects up to `delta`
/// deletions in each block of length `ell` (block-by-block decodable when
/// `block_decodable`). The witness is the lexicographically smallest
/// maximum code, so reports are reproducible.
pub fn max_code_search(ell: usize, n: usize, delta: usize, block_decodable: bool) -> Result<VerificationReport> {
    if n > MAX_SEARCH_BITS {
        return Err(Error::TooLarge(format!("2^{n} strings (limit 2^{MAX_SEARCH_BITS})")));
    }
    let b = bounds(delta, ell, n)?;
    let start = Instant::now();
    let strings: Vec<BitString> = (0..1u64 << n).map(|v| BitString::from_u64(v, n)).collect();
    check_shape(&strings, ell, delta)?;
    let m = n / ell;

    // Drop strings that conflict with themselves.
    let mut keep = Vec::new();
    let mut per_string = Vec::new();
    for x in &strings {
        let sc = scenarios(x, ell, delta);
        let mut ok = true;
        let mut by_y: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for s in &sc {
            let c = s.counts();
            if *by_y.entry(&s.y).or_insert_with(|| c.clone()) != c {
                ok = false;
                break;
            }
        }
        if ok && block_decodable {
            'blocks: for j in 1..=m {
                let mut by_w: HashMap<&[u8], usize> = HashMap::new();
                for s in &sc {
                    let d = s.deleted[j - 1].len();
                    if *by_w.entry(s.window(j, ell)).or_insert(d) != d {
                        ok = false;
                        break 'blocks;
                    }
                }
            }
        }
        if ok {
            keep.push(x.clone());
            per_string.push(sc);
        }
    }

    let nv = keep.len();
    let mut adj = vec![Bits::empty(nv); nv];
    let mut by_y: HashMap<Vec<u8>, Vec<(usize, Vec<usize>)>> = HashMap::new();
    for (i, sc) in per_string.iter().enumerate() {
        for s in sc {
            by_y.entry(s.y.clone()).or_default().push((i, s.counts()));
        }
    }
    add_edges(by_y, &mut adj);
    if block_decodable {
        let mut by_w: HashMap<(usize, Vec<u8>), Vec<(usize, Vec<usize>)>> = HashMap::new();
        for (i, sc) in per_string.iter().enumerate() {
            for s in sc {
                for j in 1..=m {
                    by_w.entry((j, s.window(j, ell).to_vec()))
                        .or_default()
                        .push((i, vec![s.deleted[j - 1].len()]));
                }
            }
        }
        add_edges(by_w, &mut adj);
    }
    let edges: usize = adj.iter().map(Bits::len).sum::<usize>() / 2;

    let cap = if block_decodable {
        b.block_decodable_cap()
    } else {
        b.general_cap()
    } as usize;
    let mut mis = Mis { adj: &adj, nodes: 0 };
    let size = mis
        .solve(Bits::full(nv), 0, usize::MAX)
        .map_or(0, |s| s.len());
    let search_nodes = mis.nodes;

    // Lexicographically smallest independent set of that size.
    let mut chosen = Vec::new();
    let mut p = Bits::full(nv);
    for v in 0..nv {
        if chosen.len() == size {
            break;
        }
        if !p.contains(v) {
            continue;
        }
        let mut rest = p.and_not(&adj[v]);
        for u in 0..=v {
            rest.remove(u);
        }
        let need = size - chosen.len() - 1;
        let feasible = need == 0 || mis.solve(rest.clone(), need - 1, need).is_some();
        if feasible {
            chosen.push(v);
            p = rest;
        } else {
            p.remove(v);
        }
    }
    assert_eq!(chosen.len(), size, "witness reconstruction");

    let construction = 1u64 << (n - b.construction_redundancy);
    let mut report = VerificationReport::new(
        ReportKind::MaxCodeSearch,
        ReportParams::Raw { delta, ell, n },
    );
    report.passed = size as u64 <= cap as u64 && size as u64 >= construction;
    if !report.passed {
        report.findings.push(format!(
            "size {size} outside [{construction}, {cap}]"
        ));
    }
    report.metric("code_size", size);
    report.metric("block_decodable", block_decodable as u64);
    report.metric("strings", strings.len());
    report.metric("self_conflicting", strings.len() - nv);
    report.metric("vertices", nv);
    report.metric("edges", edges);
    report.metric("search_nodes", search_nodes);
    report.metric("witness_nodes", mis.nodes - search_nodes);
    report.metric("upper_cap", cap);
    report.metric("construction_size", construction);
    report.metric("elapsed_ms", start.elapsed().as_secs_f64() * 1e3);
    report.witness = Some(chosen.into_iter().map(|i| keep[i].clone()).collect());
    report.bounds = Some(b);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bits> {
        let mut adj = vec![Bits::empty(n); n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    fn brute_mis(n: usize, edges: &[(usize, usize)]) -> usize {
        (0u32..1 << n)
            .filter(|s| edges.iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn mis_matches_brute_force_on_small_graphs() {
        // 5-cycle, a path, a clique and a pseudo-random graph
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            (6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
            (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            (
                12,
                (0..12)
                    .flat_map(|u| (u + 1..12).map(move |v| (u, v)))
                    .filter(|&(u, v)| (u * 7 + v * 13) % 5 < 2)
                    .collect(),
            ),
        ];
        for (n, edges) in cases {
            let adj = graph(n, &edges);
            let mut mis = Mis { adj: &adj, nodes: 0 };
            let got = mis.solve(Bits::full(n), 0, usize::MAX).unwrap();
            assert_eq!(got.len(), brute_mis(n, &edges));
            for &(u, v) in &edges {
                assert!(!(got.contains(&u) && got.contains(&v)));
            }
        }
    }

    #[test]
    fn bitset_iteration() {
        let mut b = Bits::empty(130);
        for v in [0, 63, 64, 129] {
            b.insert(v);
        }
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(b.len(), 4);
    }
}
