//! Lazy exhaustive enumerators for both partition families.
//!
//! Both iterators yield in lexicographic order of the parts vector (a proper
//! prefix sorts before its extensions). Each is a plain value with no shared
//! state; call the constructor again to restart.

use crate::partition::{BoundedPartition, LectureHallPartition};

/// Every lecture hall partition with `n` parts and weight at most `max_weight`.
pub fn enumerate_lecture_hall(n: usize, max_weight: i64) -> LectureHallIter {
    assert!(n > 0, "number of parts must be positive");
    LectureHallIter {
        n,
        max_weight,
        current: None,
        done: max_weight < 0,
    }
}

/// Every bounded partition for `n` with weight at most `max_weight`,
/// starting with the empty partition.
pub fn enumerate_bounded(n: usize, max_weight: i64) -> BoundedIter {
    assert!(n > 0, "n must be positive");
    BoundedIter {
        n: n as i64,
        max_weight,
        stack: Vec::new(),
        weight: 0,
        started: false,
        done: max_weight < 0,
    }
}

#[derive(Debug, Clone)]
pub struct LectureHallIter {
    n: usize,
    max_weight: i64,
    current: Option<Vec<i64>>,
    done: bool,
}

impl LectureHallIter {
    /// Smallest admissible values for the positions after `index` (0-based)
    /// when position `index` holds `value`, filled left to right with
    /// λₘ = ⌈λₘ₋₁·m / (m-1)⌉. Returns their sum.
    fn fill_min(&self, index: usize, value: i64, out: &mut [i64]) -> i128 {
        let mut previous = value as i128;
        let mut total = 0i128;
        for (slot, m) in out.iter_mut().zip(index as i128 + 2..) {
            let min = (previous * m + m - 2) / (m - 1);
            // bounded by value·n / (index+1), which fits because value <= max_weight
            *slot = min as i64;
            total += min;
            previous = min;
        }
        total
    }
}

impl Iterator for LectureHallIter {
    type Item = LectureHallPartition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let Some(mut parts) = self.current.take() else {
            let zero = vec![0; self.n];
            self.current = Some(zero.clone());
            return Some(LectureHallPartition::from_parts_unchecked(zero));
        };
        let mut prefix: i128 = parts.iter().map(|&p| p as i128).sum();
        for k in (0..self.n).rev() {
            prefix -= parts[k] as i128;
            let candidate = parts[k] + 1;
            let mut tail = vec![0; self.n - k - 1];
            let fill = self.fill_min(k, candidate, &mut tail);
            if prefix + candidate as i128 + fill <= self.max_weight as i128 {
                parts[k] = candidate;
                parts[k + 1..].copy_from_slice(&tail);
                self.current = Some(parts.clone());
                return Some(LectureHallPartition::from_parts_unchecked(parts));
            }
        }
        self.done = true;
        None
    }
}

#[derive(Debug, Clone)]
pub struct BoundedIter {
    n: i64,
    max_weight: i64,
    stack: Vec<i64>,
    weight: i64,
    started: bool,
    done: bool,
}

impl BoundedIter {
    fn emit(&self) -> BoundedPartition {
        BoundedPartition::from_parts_unchecked(self.n as usize, self.stack.clone())
    }

    fn fits(&self, part: i64) -> bool {
        part <= 2 * self.n && self.weight + part <= self.max_weight
    }
}

impl Iterator for BoundedIter {
    type Item = BoundedPartition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.emit());
        }
        // descend: smallest admissible extension
        let extension = match self.stack.last() {
            None => 1,
            Some(&last) if last > self.n => last,
            Some(&last) => last + 1,
        };
        if self.fits(extension) {
            self.stack.push(extension);
            self.weight += extension;
            return Some(self.emit());
        }
        // backtrack: bump the deepest part that still has room
        while let Some(last) = self.stack.pop() {
            self.weight -= last;
            if self.fits(last + 1) {
                self.stack.push(last + 1);
                self.weight += last + 1;
                return Some(self.emit());
            }
        }
        self.done = true;
        None
    }
}
