//! Isomorphism search between observers.
//!
//! States are assigned in construction order, each trying target states in
//! ascending order, so the first complete assignment found is the
//! lexicographically least isomorphism. Candidate targets are restricted by
//! a joint color refinement of both machines (output-class size, successor
//! and predecessor color multisets), and every partial assignment carries
//! the set of inputs each source input may still map to.

use std::collections::BTreeMap;

use super::union_find::UnionFind;
use super::{minimize, ObserverMorphism};
use crate::error::Result;
use crate::observer::Observer;

/// Necessary conditions for isomorphism. Equal across isomorphic observers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Invariants {
    pub sizes: (usize, usize, usize),
    pub reduced_sizes: (usize, usize, usize),
    /// Sizes of the classes `g^-1(z)` over emitted outputs, sorted.
    pub output_class_sizes: Vec<usize>,
    /// Number of `(x, y)` pairs landing in each state, sorted.
    pub in_degrees: Vec<usize>,
}

pub fn canonical_invariants(obs: &Observer) -> Invariants {
    let mut class = vec![0usize; obs.num_outputs()];
    for x in 0..obs.num_states() {
        class[obs.out(x)] += 1;
    }
    let mut output_class_sizes: Vec<usize> = class.into_iter().filter(|&c| c > 0).collect();
    output_class_sizes.sort_unstable();

    let mut in_degrees = vec![0usize; obs.num_states()];
    for &t in obs.transition_table() {
        in_degrees[t] += 1;
    }
    in_degrees.sort_unstable();

    Invariants {
        sizes: (obs.num_states(), obs.num_inputs(), obs.num_outputs()),
        reduced_sizes: minimize(obs).reduced_sizes(),
        output_class_sizes,
        in_degrees,
    }
}

/// Searches for a bijective homomorphism from `a` to `b`.
///
/// With `anchors = Some((xa, xb))`, the state map must send `xa` to `xb`.
/// Returns the lexicographically least isomorphism, comparing the state
/// map first, then the input map, then the output map, each as a sequence
/// of target indices in source construction order.
pub fn find_isomorphism(
    a: &Observer,
    b: &Observer,
    anchors: Option<(&str, &str)>,
) -> Result<Option<ObserverMorphism>> {
    let anchors = match anchors {
        Some((xa, xb)) => Some((a.states().lookup(xa)?, b.states().lookup(xb)?)),
        None => None,
    };
    Ok(search(a, b, anchors))
}

/// True iff some isomorphism between `a` and `b` exists.
pub fn equivalent(a: &Observer, b: &Observer) -> bool {
    search(a, b, None).is_some()
}

/// Groups indices of mutually equivalent observers. Groups are ordered by
/// their smallest index.
pub fn equivalence_partition(observers: &[Observer]) -> Vec<Vec<usize>> {
    let invariants: Vec<Invariants> = observers.iter().map(canonical_invariants).collect();
    let mut uf = UnionFind::new(observers.len());
    for i in 0..observers.len() {
        for j in i + 1..observers.len() {
            if invariants[i] != invariants[j] || uf.find(i) == uf.find(j) {
                continue;
            }
            if equivalent(&observers[i], &observers[j]) {
                uf.union(i, j);
            }
        }
    }
    uf.groups()
}

fn search(a: &Observer, b: &Observer, anchors: Option<(usize, usize)>) -> Option<ObserverMorphism> {
    let n = a.num_states();
    if (n, a.num_inputs(), a.num_outputs()) != (b.num_states(), b.num_inputs(), b.num_outputs()) {
        return None;
    }
    let (colors_a, colors_b) = joint_colors(a, b);
    let mut cand: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&x2| colors_b[x2] == colors_a[x]).collect())
        .collect();
    if let Some((xa, xb)) = anchors {
        cand[xa].retain(|&x2| x2 == xb);
    }
    if cand.iter().any(Vec::is_empty) {
        return None;
    }

    let ny = a.num_inputs();
    let mut preds = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..ny {
            preds[a.next(x, y)].push((x, y));
        }
    }

    let mut s = Search {
        a,
        b,
        cand,
        preds,
        phi_x: vec![NONE; n],
        used_x: vec![false; n],
        phi_z: vec![NONE; a.num_outputs()],
        inv_z: vec![NONE; b.num_outputs()],
    };
    let allowed = vec![vec![true; ny]; ny];
    let phi_y = s.assign(0, allowed)?;

    let mut phi_z = s.phi_z.clone();
    let mut free_b = (0..b.num_outputs()).filter(|&z| s.inv_z[z] == NONE);
    for slot in phi_z.iter_mut().filter(|z| **z == NONE) {
        *slot = free_b.next().expect("output counts match");
    }
    let m = ObserverMorphism::new(a, b, s.phi_x.clone(), phi_y, phi_z)
        .expect("search only produces in-range maps");
    debug_assert!(m.is_bijective());
    Some(m)
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    a: &'a Observer,
    b: &'a Observer,
    cand: Vec<Vec<usize>>,
    preds: Vec<Vec<(usize, usize)>>,
    phi_x: Vec<usize>,
    used_x: Vec<bool>,
    phi_z: Vec<usize>,
    inv_z: Vec<usize>,
}

impl Search<'_> {
    /// Assigns state `x` and onwards; returns the input map on success.
    fn assign(&mut self, x: usize, allowed: Vec<Vec<bool>>) -> Option<Vec<usize>> {
        if x == self.phi_x.len() {
            return least_matching(&allowed);
        }
        let za = self.a.out(x);
        for i in 0..self.cand[x].len() {
            let x2 = self.cand[x][i];
            if self.used_x[x2] {
                continue;
            }
            let zb = self.b.out(x2);
            let fresh_z = match (self.phi_z[za], self.inv_z[zb]) {
                (NONE, NONE) => true,
                (p, q) if p == zb && q == za => false,
                _ => continue,
            };
            self.phi_x[x] = x2;
            self.used_x[x2] = true;
            if fresh_z {
                self.phi_z[za] = zb;
                self.inv_z[zb] = za;
            }

            if let Some(next_allowed) = self.constrain(x, x2, &allowed) {
                if let Some(phi_y) = self.assign(x + 1, next_allowed) {
                    return Some(phi_y);
                }
            }

            self.phi_x[x] = NONE;
            self.used_x[x2] = false;
            if fresh_z {
                self.phi_z[za] = NONE;
                self.inv_z[zb] = NONE;
            }
        }
        None
    }

    /// Narrows the allowed input targets using every transition whose both
    /// endpoints are now assigned, and checks a perfect matching survives.
    fn constrain(&self, x: usize, x2: usize, allowed: &[Vec<bool>]) -> Option<Vec<Vec<bool>>> {
        let mut allowed = allowed.to_vec();
        for (y, row) in allowed.iter_mut().enumerate() {
            let target = self.phi_x[self.a.next(x, y)];
            if target != NONE {
                for (y2, ok) in row.iter_mut().enumerate() {
                    *ok &= self.b.next(x2, y2) == target;
                }
            }
        }
        for &(xa, y) in &self.preds[x] {
            let src = self.phi_x[xa];
            if src != NONE && xa != x {
                for (y2, ok) in allowed[y].iter_mut().enumerate() {
                    *ok &= self.b.next(src, y2) == x2;
                }
            }
        }
        has_perfect_matching(&allowed, None).then_some(allowed)
    }
}

/// Kuhn's augmenting-path matching of rows to columns. `fixed` pins row
/// `r` to column `c` and removes both from the problem.
fn has_perfect_matching(allowed: &[Vec<bool>], fixed: Option<&[usize]>) -> bool {
    let n = allowed.len();
    let mut col_owner = vec![NONE; n];
    let mut pinned_cols = vec![false; n];
    let pinned = fixed.unwrap_or(&[]);
    for &c in pinned {
        pinned_cols[c] = true;
    }
    fn augment(
        r: usize,
        allowed: &[Vec<bool>],
        pinned_cols: &[bool],
        seen: &mut [bool],
        col_owner: &mut [usize],
    ) -> bool {
        for c in 0..allowed.len() {
            if allowed[r][c] && !pinned_cols[c] && !seen[c] {
                seen[c] = true;
                if col_owner[c] == NONE || augment(col_owner[c], allowed, pinned_cols, seen, col_owner) {
                    col_owner[c] = r;
                    return true;
                }
            }
        }
        false
    }
    for r in pinned.len()..n {
        let mut seen = vec![false; n];
        if !augment(r, allowed, &pinned_cols, &mut seen, &mut col_owner) {
            return false;
        }
    }
    true
}

/// Lexicographically least perfect matching (row `r` gets the smallest
/// column that still leaves a completion).
fn least_matching(allowed: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = allowed.len();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    for r in 0..n {
        let pick = (0..n).find(|&c| {
            if !allowed[r][c] || chosen.contains(&c) {
                return false;
            }
            chosen.push(c);
            let ok = has_perfect_matching(allowed, Some(&chosen));
            chosen.pop();
            ok
        })?;
        chosen.push(pick);
    }
    Some(chosen)
}

/// Refines state colors of both machines together so colors are comparable
/// across them.
fn joint_colors(a: &Observer, b: &Observer) -> (Vec<usize>, Vec<usize>) {
    fn initial(obs: &Observer) -> Vec<Vec<usize>> {
        let mut class = vec![0usize; obs.num_outputs()];
        for x in 0..obs.num_states() {
            class[obs.out(x)] += 1;
        }
        (0..obs.num_states()).map(|x| vec![class[obs.out(x)]]).collect()
    }
    fn refine(obs: &Observer, colors: &[usize]) -> Vec<Vec<usize>> {
        let n = obs.num_states();
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..obs.num_inputs() {
                pred[obs.next(x, y)].push(colors[x]);
            }
        }
        (0..n)
            .map(|x| {
                let mut succ: Vec<usize> = (0..obs.num_inputs()).map(|y| colors[obs.next(x, y)]).collect();
                succ.sort_unstable();
                pred[x].sort_unstable();
                let mut sig = vec![colors[x]];
                sig.extend(succ);
                sig.push(NONE);
                sig.extend(&pred[x]);
                sig
            })
            .collect()
    }
    fn number(sa: Vec<Vec<usize>>, sb: Vec<Vec<usize>>) -> (Vec<usize>, Vec<usize>, usize) {
        let ids: BTreeMap<&Vec<usize>, usize> = sa
            .iter()
            .chain(sb.iter())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let ca = sa.iter().map(|s| ids[s]).collect();
        let cb = sb.iter().map(|s| ids[s]).collect();
        (ca, cb, ids.len())
    }

    let (mut ca, mut cb, mut count) = number(initial(a), initial(b));
    loop {
        let (na, nb, ncount) = number(refine(a, &ca), refine(b, &cb));
        ca = na;
        cb = nb;
        if ncount == count {
            return (ca, cb);
        }
        count = ncount;
    }
}
