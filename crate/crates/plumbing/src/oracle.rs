//! Independent verification by coset enumeration.
//!
//! A relator-based (HLT-style) Todd–Coxeter enumeration over a finite
//! presentation, with coincidence handling through a union-find and a
//! deduction-only lookahead pass before giving up on the coset budget.
//! Completion proves the group (or subgroup index) finite and yields the
//! regular permutation action, from which exact element orders follow.
//! Exhaustion is never a verdict.

use crate::presentation::Presentation;
use crate::word::{Gen, Word};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::{BTreeMap, VecDeque};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("word uses generator {0} which is not in the presentation")]
    UnknownGenerator(String),
}

/// A bare finite presentation: named generators and relators as signed
/// 1-based generator indices (`-k` is the inverse of generator `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPresentation {
    names: Vec<String>,
    relators: Vec<Vec<u32>>, // column-encoded
}

const UNDEF: u32 = u32::MAX;

fn inv(col: u32) -> u32 {
    col ^ 1
}

/// Cyclic reduction; scans treat relators as loops, so conjugation
/// padding only wastes table entries.
fn normalize_relator(mut word: Vec<u32>) -> Vec<u32> {
    while word.len() >= 2 && word[0] == inv(*word.last().unwrap()) {
        word.pop();
        word.remove(0);
    }
    word
}

impl FpPresentation {
    pub fn new(names: Vec<String>) -> Self {
        FpPresentation {
            names,
            relators: Vec::new(),
        }
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn encode(&self, signed: &[i64]) -> Vec<u32> {
        signed
            .iter()
            .map(|&s| {
                assert!(s != 0 && s.unsigned_abs() as usize <= self.ngens());
                let g = (s.unsigned_abs() - 1) as u32;
                if s > 0 {
                    2 * g
                } else {
                    2 * g + 1
                }
            })
            .collect()
    }

    pub fn add_relator(&mut self, signed: &[i64]) {
        let r = normalize_relator(self.encode(signed));
        if !r.is_empty() {
            self.relators.push(r);
        }
    }

    /// Flatten a structured presentation; returns the generator index map
    /// used for word encoding.
    pub fn from_presentation(p: &Presentation) -> (Self, BTreeMap<Gen, usize>) {
        let index = p.generator_index();
        let names = p.generators().iter().map(|g| g.to_string()).collect();
        let mut fp = FpPresentation::new(names);
        for rel in p.relators() {
            let cols = normalize_relator(word_cols(&rel.word, &index));
            if !cols.is_empty() {
                fp.relators.push(cols);
            }
        }
        fp.relators.sort_by_key(|r| std::cmp::Reverse(r.len()));
        (fp, index)
    }
}

fn word_cols(w: &Word, index: &BTreeMap<Gen, usize>) -> Vec<u32> {
    w.letters()
        .iter()
        .map(|&(g, inverted)| {
            let i = index[&g] as u32;
            if inverted {
                2 * i + 1
            } else {
                2 * i
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct EnumLimits {
    pub max_cosets: usize,
    pub max_time: Option<Duration>,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_cosets: 1_000_000,
            max_time: None,
        }
    }
}

impl EnumLimits {
    pub fn cosets(max_cosets: usize) -> Self {
        EnumLimits {
            max_cosets,
            ..Default::default()
        }
    }
}

/// Completed, compacted coset table: every coset live, every entry defined.
#[derive(Debug, Clone)]
pub struct CosetTable {
    ncols: usize,
    data: Vec<u32>,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.data.len() / self.ncols
    }

    pub fn trace(&self, start: usize, cols: &[u32]) -> usize {
        let mut c = start;
        for &col in cols {
            c = self.data[c * self.ncols + col as usize] as usize;
        }
        c
    }

    /// Order of the permutation induced by a word on the cosets: the lcm
    /// of its cycle lengths. On the trivial-subgroup table this is the
    /// exact order of the element.
    pub fn permutation_order(&self, cols: &[u32]) -> BigUint {
        let n = self.coset_count();
        let mut seen = vec![false; n];
        let mut order = BigUint::one();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut c = start;
            loop {
                seen[c] = true;
                len += 1;
                c = self.trace(c, cols);
                if c == start {
                    break;
                }
            }
            order = order.lcm(&BigUint::from(len));
        }
        order
    }

    /// Every relator must act as the identity permutation.
    pub fn relators_act_trivially(&self, p: &FpPresentation) -> bool {
        (0..self.coset_count()).all(|c| p.relators.iter().all(|r| self.trace(c, r) == c))
    }
}

#[derive(Debug, Clone)]
pub enum EnumOutcome {
    Complete(CosetTable),
    Exhausted { high_water: usize },
}

struct Enumerator<'a> {
    pres: &'a FpPresentation,
    ncols: usize,
    data: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    total_defined: usize,
    queue: VecDeque<(u32, u32)>,
    /// New table entries awaiting relator propagation.
    ded_stack: Vec<(u32, u32)>,
    /// For each column, the (relator, position) pairs traversing it.
    occurrences: Vec<Vec<(u32, u32)>>,
    max_rows: usize,
    deadline: Option<Instant>,
}

struct TableFull;

impl<'a> Enumerator<'a> {
    fn new(pres: &'a FpPresentation, lim: &EnumLimits) -> Self {
        let ncols = 2 * pres.ngens();
        // One anchor per (relator, column): the propagation is an
        // accelerator, the row loop guarantees closure.
        let mut occurrences = vec![Vec::new(); ncols.max(1)];
        for (ri, r) in pres.relators.iter().enumerate() {
            let mut seen = vec![false; ncols.max(1)];
            for (k, &col) in r.iter().enumerate() {
                if !seen[col as usize] {
                    seen[col as usize] = true;
                    occurrences[col as usize].push((ri as u32, k as u32));
                }
            }
        }
        Enumerator {
            pres,
            ncols,
            data: vec![UNDEF; ncols.max(1)],
            parent: vec![0],
            live: 1,
            total_defined: 1,
            queue: VecDeque::new(),
            ded_stack: Vec::new(),
            occurrences,
            max_rows: lim.max_cosets.max(2),
            deadline: lim.max_time.map(|t| Instant::now() + t),
        }
    }

    fn nrows(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn is_live(&mut self, x: u32) -> bool {
        self.find(x) == x
    }

    fn raw(&self, a: u32, col: u32) -> u32 {
        self.data[a as usize * self.ncols + col as usize]
    }

    fn set_raw(&mut self, a: u32, col: u32, v: u32) {
        self.data[a as usize * self.ncols + col as usize] = v;
    }

    fn get(&mut self, a: u32, col: u32) -> u32 {
        let a = self.find(a);
        let v = self.raw(a, col);
        if v == UNDEF {
            UNDEF
        } else {
            self.find(v)
        }
    }

    fn define(&mut self, a: u32, col: u32) -> Result<u32, TableFull> {
        if self.nrows() >= self.max_rows {
            return Err(TableFull);
        }
        let n = self.nrows() as u32;
        self.data.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.parent.push(n);
        self.live += 1;
        self.total_defined += 1;
        let a = self.find(a);
        self.set_raw(a, col, n);
        self.set_raw(n, inv(col), a);
        self.ded_stack.push((a, col));
        Ok(n)
    }

    /// Record `a . col = b`, queueing coincidences on clash, and drain the
    /// coincidence queue.
    fn deduce(&mut self, a: u32, col: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        let cur = self.raw(a, col);
        if cur == UNDEF {
            self.set_raw(a, col, b);
            self.ded_stack.push((a, col));
        } else {
            let cur = self.find(cur);
            if cur != b {
                self.queue.push_back((cur, b));
            }
        }
        let a = self.find(a);
        let b = self.find(b);
        let rcur = self.raw(b, inv(col));
        if rcur == UNDEF {
            self.set_raw(b, inv(col), a);
        } else {
            let rcur = self.find(rcur);
            if rcur != a {
                self.queue.push_back((rcur, a));
            }
        }
        self.process_coincidences();
    }

    fn process_coincidences(&mut self) {
        while let Some((x, y)) = self.queue.pop_front() {
            let x = self.find(x);
            let y = self.find(y);
            if x == y {
                continue;
            }
            let (s, d) = if x < y { (x, y) } else { (y, x) };
            self.parent[d as usize] = s;
            self.live -= 1;
            for col in 0..self.ncols as u32 {
                let u = self.raw(d, col);
                if u == UNDEF {
                    continue;
                }
                let s = self.find(s);
                let cur = self.raw(s, col);
                if cur == UNDEF {
                    self.set_raw(s, col, u);
                    self.ded_stack.push((s, col));
                } else {
                    let cu = self.find(cur);
                    let uu = self.find(u);
                    if cu != uu {
                        self.queue.push_back((cu, uu));
                    }
                }
            }
        }
    }

    /// Scan a word at a coset, defining cosets to close the gap (HLT).
    /// No coincidence can fire while the gap is open, so the scan
    /// positions stay live and the walk never restarts.
    fn scan_fill(&mut self, start: u32, word: &[u32]) -> Result<(), TableFull> {
        let mut f = self.find(start);
        let mut fi = 0;
        let mut b = f;
        let mut bi = word.len();
        loop {
            while fi < bi {
                let next = self.get(f, word[fi]);
                if next == UNDEF {
                    break;
                }
                f = next;
                fi += 1;
            }
            if fi == bi {
                if f != b {
                    self.queue.push_back((f, b));
                    self.process_coincidences();
                }
                return Ok(());
            }
            while bi > fi {
                let prev = self.get(b, inv(word[bi - 1]));
                if prev == UNDEF {
                    break;
                }
                b = prev;
                bi -= 1;
            }
            if bi == fi {
                if f != b {
                    self.queue.push_back((f, b));
                    self.process_coincidences();
                }
                return Ok(());
            }
            if bi == fi + 1 {
                self.deduce(f, word[fi], b);
                return Ok(());
            }
            f = self.define(f, word[fi])?;
            fi += 1;
        }
    }

    /// Propagate pending deductions: for each new edge, scan every
    /// relator rotation that traverses it. Definition-free, so the table
    /// only closes or merges.
    fn drain_deductions(&mut self) {
        while let Some((a, col)) = self.ded_stack.pop() {
            let occs = std::mem::take(&mut self.occurrences[col as usize]);
            for &(ri, k) in &occs {
                if !self.is_live(a) {
                    break;
                }
                let r = &self.pres.relators[ri as usize];
                self.scan_cyclic(a, ri, k as usize, r.len());
            }
            self.occurrences[col as usize] = occs;
            if self.out_of_time() {
                self.ded_stack.clear();
                return;
            }
        }
    }

    /// Deduction-free scan of the rotation of relator `ri` starting at
    /// position `k`, anchored at `a`.
    fn scan_cyclic(&mut self, a: u32, ri: u32, k: usize, len: usize) {
        let at = |idx: usize| self.pres.relators[ri as usize][(k + idx) % len];
        let mut f = self.find(a);
        let mut fi = 0;
        let mut b = f;
        let mut bi = len;
        while fi < bi {
            let next = self.get(f, at(fi));
            if next == UNDEF {
                break;
            }
            f = next;
            fi += 1;
        }
        if fi == bi {
            if f != b {
                self.queue.push_back((f, b));
                self.process_coincidences();
            }
            return;
        }
        while bi > fi {
            let prev = self.get(b, inv(at(bi - 1)));
            if prev == UNDEF {
                break;
            }
            b = prev;
            bi -= 1;
        }
        if bi == fi {
            if f != b {
                self.queue.push_back((f, b));
                self.process_coincidences();
            }
        } else if bi == fi + 1 {
            self.deduce(f, at(fi), b);
        }
    }

    /// Deduction-only scan: close what can be closed without definitions.
    fn scan_no_fill(&mut self, start: u32, word: &[u32]) {
        let mut f = self.find(start);
        let mut fi = 0;
        let mut b = f;
        let mut bi = word.len();
        while fi < bi {
            let next = self.get(f, word[fi]);
            if next == UNDEF {
                break;
            }
            f = next;
            fi += 1;
        }
        if fi == bi {
            if f != b {
                self.queue.push_back((f, b));
                self.process_coincidences();
            }
            return;
        }
        while bi > fi {
            let prev = self.get(b, inv(word[bi - 1]));
            if prev == UNDEF {
                break;
            }
            b = prev;
            bi -= 1;
        }
        if bi == fi {
            if f != b {
                self.queue.push_back((f, b));
                self.process_coincidences();
            }
        } else if bi == fi + 1 {
            self.deduce(f, word[fi], b);
        }
    }

    /// Lookahead pass over the whole table, then rebuild without dead
    /// rows. Returns the remapped current position.
    fn lookahead_and_compact(&mut self, pos: u32) -> u32 {
        let relators: Vec<Vec<u32>> = self.pres.relators.clone();
        for c in 0..self.nrows() as u32 {
            if !self.is_live(c) {
                continue;
            }
            for r in &relators {
                self.scan_no_fill(c, r);
            }
        }
        // Renumber live cosets in order.
        let fpos = self.find(pos);
        let nrows = self.nrows();
        let mut map = vec![UNDEF; nrows];
        let mut next = 0u32;
        for c in 0..nrows as u32 {
            if self.find(c) == c {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut data = vec![UNDEF; next as usize * self.ncols];
        for c in 0..nrows as u32 {
            if self.find(c) != c {
                continue;
            }
            let nc = map[c as usize] as usize;
            for col in 0..self.ncols {
                let v = self.raw(c, col as u32);
                if v != UNDEF {
                    let fv = self.find(v);
                    data[nc * self.ncols + col] = map[fv as usize];
                }
            }
        }
        self.data = data;
        self.parent = (0..next).collect();
        self.live = next as usize;
        // Pending deductions refer to pre-compaction numbering.
        self.ded_stack.clear();
        map[fpos as usize]
    }

    fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() > d)
    }

    /// Collapsing enumerations can define far more cosets than ever live
    /// at once; cap the total work at a multiple of the row budget.
    fn over_budget(&self) -> bool {
        self.total_defined >= self.max_rows.saturating_mul(50)
    }

    fn run(&mut self, subgroup: &[Vec<u32>]) -> EnumOutcome {
        for w in subgroup {
            if !w.is_empty() {
                let zero = self.find(0);
                if self.scan_fill(zero, w).is_err() {
                    return EnumOutcome::Exhausted {
                        high_water: self.total_defined,
                    };
                }
            }
        }
        let relators: Vec<Vec<u32>> = self.pres.relators.clone();
        let mut i: u32 = 0;
        while (i as usize) < self.nrows() {
            if self.out_of_time() {
                return EnumOutcome::Exhausted {
                    high_water: self.total_defined,
                };
            }
            if !self.is_live(i) {
                i += 1;
                continue;
            }
            let mut done = false;
            while !done {
                done = true;
                for r in &relators {
                    if !self.is_live(i) {
                        break;
                    }
                    if self.scan_fill(i, r).is_err() {
                        i = self.lookahead_and_compact(i);
                        if self.nrows() >= self.max_rows || self.over_budget() {
                            return EnumOutcome::Exhausted {
                                high_water: self.total_defined,
                            };
                        }
                        done = false;
                        break;
                    }
                    self.drain_deductions();
                }
            }
            if !self.is_live(i) {
                i += 1;
                continue;
            }
            for col in 0..self.ncols as u32 {
                if self.get(i, col) == UNDEF {
                    let rep = self.find(i);
                    match self.define(rep, col) {
                        Ok(_) => {}
                        Err(TableFull) => {
                            i = self.lookahead_and_compact(i);
                            if self.nrows() >= self.max_rows || self.over_budget() {
                                return EnumOutcome::Exhausted {
                                    high_water: self.total_defined,
                                };
                            }
                            let rep = self.find(i);
                            if self.get(rep, col) == UNDEF {
                                let _ = self.define(rep, col);
                            }
                        }
                    }
                }
                self.drain_deductions();
            }
            i += 1;
        }
        // Closure fixpoint: scanning a fully defined table can only merge.
        loop {
            let live_before = self.live;
            for c in 0..self.nrows() as u32 {
                if !self.is_live(c) {
                    continue;
                }
                for r in &relators {
                    self.scan_no_fill(c, r);
                }
            }
            if self.live == live_before {
                break;
            }
        }
        let zero = self.find(0);
        let _ = self.lookahead_and_compact(zero);
        EnumOutcome::Complete(CosetTable {
            ncols: self.ncols,
            data: std::mem::take(&mut self.data),
        })
    }
}

/// Enumerate cosets of the subgroup generated by `subgroup` (column-encoded
/// words; empty slice = trivial subgroup).
pub fn enumerate(p: &FpPresentation, subgroup: &[Vec<u32>], lim: &EnumLimits) -> EnumOutcome {
    Enumerator::new(p, lim).run(subgroup)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigUint),
    Exhausted { high_water: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigUint),
    AtLeast(BigUint),
    Exhausted { high_water: usize },
}

/// Order of the whole group presented by `fp`.
pub fn fp_group_order(fp: &FpPresentation, lim: &EnumLimits) -> GroupOrder {
    match enumerate(fp, &[], lim) {
        EnumOutcome::Complete(t) => GroupOrder::Finite(BigUint::from(t.coset_count())),
        EnumOutcome::Exhausted { high_water } => GroupOrder::Exhausted { high_water },
    }
}

/// Order of the element given by a column-encoded word.
pub fn fp_element_order(fp: &FpPresentation, word: &[u32], lim: &EnumLimits) -> ElementOrder {
    if word.is_empty() {
        return ElementOrder::Finite(BigUint::one());
    }
    match enumerate(fp, &[], lim) {
        EnumOutcome::Complete(t) => ElementOrder::Finite(t.permutation_order(word)),
        EnumOutcome::Exhausted { high_water } => {
            // Enumerate modulo cyclic subgroups <w^k>; a completed table
            // proves w^j nontrivial whenever w^j moves the subgroup coset.
            let mut best: Option<u64> = None;
            let mut high = high_water;
            for k in [2u32, 4, 8, 16, 32] {
                let mut power = Vec::new();
                for _ in 0..k {
                    power.extend_from_slice(word);
                }
                match enumerate(fp, &[power], lim) {
                    EnumOutcome::Complete(t) => {
                        let mut shown = 0u64;
                        let mut c = 0usize;
                        for _ in 1..k {
                            c = t.trace(c, word);
                            if c == 0 {
                                break;
                            }
                            shown += 1;
                        }
                        if shown > 0 {
                            best = Some(best.unwrap_or(0).max(shown + 1));
                        }
                    }
                    EnumOutcome::Exhausted { high_water } => {
                        high = high.max(high_water);
                        break;
                    }
                }
            }
            match best {
                Some(k) => ElementOrder::AtLeast(BigUint::from(k)),
                None => ElementOrder::Exhausted { high_water: high },
            }
        }
    }
}

/// Order of the group of a structured presentation.
pub fn group_order(p: &Presentation, lim: &EnumLimits) -> GroupOrder {
    let (fp, _) = FpPresentation::from_presentation(p);
    fp_group_order(&fp, lim)
}

/// Order of the image of a word in the group of a structured presentation.
pub fn element_order(
    p: &Presentation,
    w: &Word,
    lim: &EnumLimits,
) -> Result<ElementOrder, OracleError> {
    let (fp, index) = FpPresentation::from_presentation(p);
    for (g, _) in w.letters() {
        if !index.contains_key(g) {
            return Err(OracleError::UnknownGenerator(g.to_string()));
        }
    }
    Ok(fp_element_order(&fp, &word_cols(w, &index), lim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::chain_graph;
    use crate::presentation::build_presentation;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn cyclic(n: i64) -> FpPresentation {
        let mut fp = FpPresentation::new(vec!["x".into()]);
        fp.add_relator(&vec![1; n as usize]);
        fp
    }

    #[test]
    fn cyclic_groups() {
        for n in 1..=12 {
            let fp = cyclic(n);
            assert_eq!(
                fp_group_order(&fp, &EnumLimits::default()),
                GroupOrder::Finite(big(n as u64))
            );
        }
    }

    #[test]
    fn free_group_exhausts() {
        let fp = FpPresentation::new(vec!["x".into()]);
        match fp_group_order(&fp, &EnumLimits::cosets(100)) {
            GroupOrder::Exhausted { high_water } => assert!(high_water >= 100),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_group_s3() {
        // <a, b | a^2, b^2, (ab)^3>
        let mut fp = FpPresentation::new(vec!["a".into(), "b".into()]);
        fp.add_relator(&[1, 1]);
        fp.add_relator(&[2, 2]);
        fp.add_relator(&[1, 2, 1, 2, 1, 2]);
        assert_eq!(
            fp_group_order(&fp, &EnumLimits::default()),
            GroupOrder::Finite(big(6))
        );
        let a_ord = fp_element_order(&fp, &fp.encode(&[1]), &EnumLimits::default());
        assert_eq!(a_ord, ElementOrder::Finite(big(2)));
        let ab = fp.encode(&[1, 2]);
        assert_eq!(
            fp_element_order(&fp, &ab, &EnumLimits::default()),
            ElementOrder::Finite(big(3))
        );
    }

    #[test]
    fn quaternion_group() {
        // <a, b | a^2 = b^2 = (ab)^2> presented with relators.
        let mut fp = FpPresentation::new(vec!["a".into(), "b".into()]);
        fp.add_relator(&[1, 1, -2, -2]);
        fp.add_relator(&[1, 1, -1, -2, -1, -2]);
        assert_eq!(
            fp_group_order(&fp, &EnumLimits::default()),
            GroupOrder::Finite(big(8))
        );
        // a^2 is the central involution.
        assert_eq!(
            fp_element_order(&fp, &fp.encode(&[1, 1]), &EnumLimits::default()),
            ElementOrder::Finite(big(2))
        );
    }

    #[test]
    fn chain_presentation_order() {
        let p = build_presentation(&chain_graph(&[-2, -2, -2, -2]));
        assert_eq!(
            group_order(&p, &EnumLimits::default()),
            GroupOrder::Finite(big(5))
        );
        let w = Word::generator(Gen::Gamma(2));
        assert_eq!(
            element_order(&p, &w, &EnumLimits::default()).unwrap(),
            ElementOrder::Finite(big(5))
        );
    }

    #[test]
    fn unknown_generator_rejected() {
        let p = build_presentation(&chain_graph(&[-2]));
        let w = Word::generator(Gen::Gamma(99));
        assert_eq!(
            element_order(&p, &w, &EnumLimits::default()).unwrap_err(),
            OracleError::UnknownGenerator("g99".into())
        );
    }

    #[test]
    fn relators_act_trivially_on_complete_table() {
        let mut fp = FpPresentation::new(vec!["a".into(), "b".into()]);
        fp.add_relator(&[1, 1, 1]);
        fp.add_relator(&[2, 2]);
        fp.add_relator(&[1, 2, 1, 2, 1, 2, 1, 2]); // (2,3,4) triangle group
        let EnumOutcome::Complete(t) = enumerate(&fp, &[], &EnumLimits::default()) else {
            panic!("should complete");
        };
        assert_eq!(t.coset_count(), 24);
        assert!(t.relators_act_trivially(&fp));
    }

    #[test]
    fn subgroup_index() {
        // Index of <ab> in the (2,3,7) triangle group quotient S3 check:
        // use S3 = <a,b | a^2, b^3, (ab)^2>; subgroup <b> has index 2.
        let mut fp = FpPresentation::new(vec!["a".into(), "b".into()]);
        fp.add_relator(&[1, 1]);
        fp.add_relator(&[2, 2, 2]);
        fp.add_relator(&[1, 2, 1, 2]);
        let sub = vec![fp.encode(&[2])];
        let EnumOutcome::Complete(t) = enumerate(&fp, &sub, &EnumLimits::default()) else {
            panic!("should complete");
        };
        assert_eq!(t.coset_count(), 2);
    }

    #[test]
    fn at_least_bound_on_infinite_group() {
        // Z = <x | >: full enumeration exhausts, but cosets of <x^k> close.
        let fp = FpPresentation::new(vec!["x".into()]);
        let ord = fp_element_order(&fp, &fp.encode(&[1]), &EnumLimits::cosets(64));
        match ord {
            ElementOrder::AtLeast(k) => assert!(k >= big(16)),
            other => panic!("expected a lower bound, got {other:?}"),
        }
    }

    #[test]
    fn determinism() {
        let p = build_presentation(&chain_graph(&[-3, -2, -4]));
        let a = group_order(&p, &EnumLimits::default());
        let b = group_order(&p, &EnumLimits::default());
        assert_eq!(a, b);
    }

    #[test]
    fn element_orders_divide_the_group_order() {
        use num_integer::Integer;
        use num_traits::Zero;
        // (2,3,4) triangle group: order 24.
        let mut fp = FpPresentation::new(vec!["a".into(), "b".into()]);
        fp.add_relator(&[1, 1, 1]);
        fp.add_relator(&[2, 2]);
        fp.add_relator(&[1, 2, 1, 2, 1, 2, 1, 2]);
        let GroupOrder::Finite(total) = fp_group_order(&fp, &EnumLimits::default()) else {
            panic!("should be finite");
        };
        for word in [vec![1i64], vec![2], vec![1, 2], vec![1, 2, -1, -2], vec![1, 1, 2]] {
            let ElementOrder::Finite(ord) =
                fp_element_order(&fp, &fp.encode(&word), &EnumLimits::default())
            else {
                panic!("element order should be finite");
            };
            assert!((&total % &ord).is_zero(), "{word:?}: {ord} does not divide {total}");
        }
    }
}
