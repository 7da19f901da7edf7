//! Finite groups by multiplication table.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite group on the elements `0..order`, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    unit: usize,
    labels: Vec<String>,
}

impl FinGroup {
    /// Builds a group from its Cayley table, checking closure, associativity, unit and inverses.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::invalid("group", "nonempty", "order 0"));
        }
        let mut mult = Vec::with_capacity(n * n);
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(
                    "group",
                    "square table",
                    format!("row {g} has {} entries", row.len()),
                ));
            }
            for (h, &gh) in row.iter().enumerate() {
                if gh >= n {
                    return Err(Error::invalid(
                        "group",
                        "closure",
                        format!("{g}*{h} = {gh}"),
                    ));
                }
                mult.push(gh);
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::invalid(
                    "group",
                    "one label per element",
                    format!("{} labels", l.len()),
                ))
            }
            Some(l) => l,
            None => (0..n).map(|g| g.to_string()).collect(),
        };
        let at = |g: usize, h: usize| mult[g * n + h];
        let unit = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::invalid("group", "unit", "no two-sided identity"))?;
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| at(g, h) == unit && at(h, g) == unit)
                .ok_or_else(|| {
                    Error::invalid("group", "inverse", format!("element {}", labels[g]))
                })?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::invalid(
                            "group",
                            "associativity",
                            format!("({}, {}, {})", labels[a], labels[b], labels[c]),
                        ));
                    }
                }
            }
        }
        Ok(Self {
            order: n,
            mult,
            inv,
            unit,
            labels,
        })
    }

    pub fn trivial() -> Self {
        Self::from_table(vec![vec![0]], Some(vec!["e".into()])).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_table(table, Some(labels)).expect("cyclic group")
    }

    /// The symmetric group on `{1..n}` with `(st)(i) = s(t(i))`, labelled in cycle notation.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(table, Some(labels)).expect("symmetric group")
    }

    /// The subgroup on `elements` (which must contain the unit and be closed),
    /// with its inclusion map into `self`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FinGroup, Vec<usize>)> {
        let pos = |g: usize| elements.iter().position(|&x| x == g);
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                let ab = self.mul(a, b);
                row.push(pos(ab).ok_or_else(|| {
                    Error::invalid(
                        "subgroup",
                        "closure",
                        format!("{} * {}", self.label(a), self.label(b)),
                    )
                })?);
            }
            table.push(row);
        }
        let labels = elements
            .iter()
            .map(|&g| self.label(g).to_string())
            .collect();
        Ok((Self::from_table(table, Some(labels))?, elements.to_vec()))
    }

    /// Subgroup generated by `gens`, listed in breadth-first order from the unit.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut out = vec![self.unit];
        seen[self.unit] = true;
        let mut i = 0;
        while i < out.len() {
            let g = out[i];
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
            i += 1;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.unit {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Witness pair where `map` fails to be a homomorphism into `target`, if any.
    pub fn homomorphism_witness(&self, target: &FinGroup, map: &[usize]) -> Option<String> {
        if map.len() != self.order {
            return Some(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                self.order
            ));
        }
        if let Some(g) = map.iter().position(|&x| x >= target.order) {
            return Some(format!("image of {} out of range", self.label(g)));
        }
        for a in self.elements() {
            for b in self.elements() {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Some(format!("({}, {})", self.label(a), self.label(b)));
                }
            }
        }
        None
    }

    /// A small generating set chosen greedily by element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().filter(|&g| g != self.unit).collect();
        by_order.sort_by_key(|&g| std::cmp::Reverse(self.element_order(g)));
        let mut gens = Vec::new();
        let mut span = vec![self.unit];
        for g in by_order {
            if span.len() == self.order {
                break;
            }
            if !span.contains(&g) {
                gens.push(g);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Every isomorphism `self -> other`, as element maps.
    pub fn isomorphisms_to(&self, other: &FinGroup) -> Vec<Vec<usize>> {
        if self.order != other.order {
            return Vec::new();
        }
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let k = self.element_order(g);
                other
                    .elements()
                    .filter(|&h| other.element_order(h) == k)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        if candidates.iter().any(Vec::is_empty) {
            return out;
        }
        loop {
            let images: Vec<usize> = choice
                .iter()
                .zip(&candidates)
                .map(|(&c, cs)| cs[c])
                .collect();
            if let Some(map) = self.extend_to_hom(other, &gens, &images) {
                let mut hit = vec![false; other.order];
                map.iter().for_each(|&x| hit[x] = true);
                if hit.iter().all(|&b| b) {
                    out.push(map);
                }
            }
            // odometer increment
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    fn extend_to_hom(
        &self,
        other: &FinGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[self.unit] = other.unit;
        let mut queue = VecDeque::from([self.unit]);
        while let Some(g) = queue.pop_front() {
            for (&s, &t) in gens.iter().zip(images) {
                let h = self.mul(g, s);
                let img = other.mul(map[g], t);
                if map[h] == usize::MAX {
                    map[h] = img;
                    queue.push_back(h);
                } else if map[h] != img {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        self.homomorphism_witness(other, &map)
            .is_none()
            .then_some(map)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}
