//! Sparse integer vectors and fraction-free echelon forms.
//!
//! Rows are kept primitive (content stripped, leading entry positive) after
//! every combination, which keeps entries small on the constraint systems
//! built by the cohomology module. Pivoting is always "first nonzero column",
//! so results are identical from run to run.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::int::Int;

/// Sparse vector of exact integers, sorted by index, without explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntVec {
    entries: Vec<(u32, Int)>,
}

impl IntVec {
    pub fn new() -> Self {
        IntVec { entries: Vec::new() }
    }

    /// Builds from unsorted `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(u32, Int)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(u32, Int)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        IntVec { entries }
    }

    /// Builds from pairs already sorted by strictly increasing index with nonzero values.
    pub fn from_sorted(entries: Vec<(u32, Int)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        IntVec { entries }
    }

    pub fn from_dense(values: &[Int]) -> Self {
        IntVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i as u32, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Int> {
        let mut out = vec![Int::ZERO; len];
        for (i, v) in &self.entries {
            out[*i as usize] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(u32, Int)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(u32, &Int)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: u32) -> Int {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn scale(&self, c: &Int) -> IntVec {
        if c.is_zero() {
            return IntVec::new();
        }
        IntVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> IntVec {
        IntVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `ca * self - cb * other`.
    pub fn combine(&self, ca: &Int, other: &IntVec, cb: &Int) -> IntVec {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take = match (a.get(i), b.get(j)) {
                (Some((ia, _)), Some((ib, _))) => ia.cmp(ib),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match take {
                std::cmp::Ordering::Less => {
                    out.push((a[i].0, &a[i].1 * ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, -&(&b[j].1 * cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = Int::mul_sub(ca, &a[i].1, cb, &b[j].1);
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        IntVec { entries: out }
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        self.combine(&Int::ONE, other, &Int::from(-1))
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        self.combine(&Int::ONE, other, &Int::ONE)
    }

    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content and makes the leading entry positive.
    pub fn make_primitive(&mut self) {
        let g = self.content();
        if g.is_zero() {
            return;
        }
        let flip = self.entries[0].1.is_negative();
        let g = if flip { -&g } else { g };
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v = v.div_exact(&g);
            }
        }
    }

    pub fn primitive(mut self) -> IntVec {
        self.make_primitive();
        self
    }

    pub fn dot(&self, other: &IntVec) -> Int {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = Int::ZERO;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = acc.add_mul(&a[i].1, &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Clears denominators of a rational vector, returning the primitive integer multiple.
    pub fn from_rationals(values: &[(u32, BigRational)]) -> IntVec {
        let mut lcm = BigInt::from(1);
        for (_, v) in values {
            lcm = num_integer::Integer::lcm(&lcm, v.denom());
        }
        let pairs = values
            .iter()
            .map(|(i, v)| (*i, Int::from((v.numer() * (&lcm / v.denom())).clone())))
            .collect();
        IntVec::from_pairs(pairs).primitive()
    }

    pub fn to_rationals(&self) -> Vec<(u32, BigRational)> {
        self.entries
            .iter()
            .map(|(i, v)| (*i, BigRational::from_integer(v.to_bigint())))
            .collect()
    }

    /// Reindexes entries through `map`, which must be injective on the support.
    pub fn permute(&self, map: impl Fn(u32) -> u32) -> IntVec {
        let mut entries: Vec<(u32, Int)> =
            self.entries.iter().map(|(i, v)| (map(*i), v.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        IntVec { entries }
    }
}

/// Row echelon form built incrementally; each stored row has a distinct
/// leading column.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<IntVec>,
    pivot_row: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r.leading().unwrap().0)
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_row[col as usize].is_some()
    }

    fn eliminate(v: &IntVec, row: &IntVec, col: u32) -> IntVec {
        let pv = row.get(col);
        let a = v.get(col);
        let g = pv.gcd(&a);
        let (ca, cb) = (pv.div_exact(&g), a.div_exact(&g));
        let mut out = v.combine(&ca, row, &cb);
        out.make_primitive();
        out
    }

    /// Eliminates the leading entry until it sits in a non-pivot column.
    pub fn reduce_leading(&self, mut v: IntVec) -> IntVec {
        while let Some((c, _)) = v.leading() {
            match self.pivot_row[c as usize] {
                Some(r) => v = Self::eliminate(&v, &self.rows[r as usize], c),
                None => break,
            }
        }
        v
    }

    /// Eliminates every entry lying in a pivot column.
    pub fn reduce_full(&self, mut v: IntVec) -> IntVec {
        let mut from = 0u32;
        loop {
            let hit = v
                .entries()
                .iter()
                .find(|(c, _)| *c >= from && self.pivot_row[*c as usize].is_some())
                .map(|(c, _)| *c);
            match hit {
                Some(c) => {
                    let r = self.pivot_row[c as usize].unwrap();
                    v = Self::eliminate(&v, &self.rows[r as usize], c);
                    from = c + 1;
                }
                None => return v,
            }
        }
    }

    /// Adds `v` to the row space; returns whether the rank increased.
    pub fn insert(&mut self, v: IntVec) -> bool {
        let v = self.reduce_leading(v);
        match v.leading() {
            Some((c, _)) => {
                self.pivot_row[c as usize] = Some(self.rows.len() as u32);
                self.rows.push(v.primitive());
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.reduce_leading(v.clone()).is_zero()
    }

    /// Back-substitutes into reduced row echelon form (rows sorted by pivot).
    pub fn into_rref(mut self) -> Rref {
        self.rows.sort_by_key(|r| r.leading().unwrap().0);
        let mut pivot_row = vec![None; self.cols];
        for (k, r) in self.rows.iter().enumerate() {
            pivot_row[r.leading().unwrap().0 as usize] = Some(k as u32);
        }
        let mut done = Echelon {
            cols: self.cols,
            rows: vec![IntVec::new(); self.rows.len()],
            pivot_row: vec![None; self.cols],
        };
        for k in (0..self.rows.len()).rev() {
            let row = std::mem::take(&mut self.rows[k]);
            let lead = row.leading().unwrap().0;
            let reduced = {
                // Keep the leading entry, eliminate later pivots only.
                let mut from = lead + 1;
                let mut v = row;
                loop {
                    let hit = v
                        .entries()
                        .iter()
                        .find(|(c, _)| *c >= from && done.pivot_row[*c as usize].is_some())
                        .map(|(c, _)| *c);
                    match hit {
                        Some(c) => {
                            let r = done.pivot_row[c as usize].unwrap();
                            v = Echelon::eliminate(&v, &done.rows[r as usize], c);
                            from = c + 1;
                        }
                        None => break v,
                    }
                }
            };
            done.rows[k] = reduced;
            done.pivot_row[lead as usize] = Some(k as u32);
        }
        Rref {
            cols: self.cols,
            rows: done.rows,
            pivot_row,
        }
    }
}

/// Reduced row echelon form: every row is zero in every other row's pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    cols: usize,
    rows: Vec<IntVec>,
    pivot_row: Vec<Option<u32>>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.leading().unwrap().0).collect()
    }

    pub fn free_cols(&self) -> Vec<u32> {
        (0..self.cols as u32)
            .filter(|c| self.pivot_row[*c as usize].is_none())
            .collect()
    }

    /// Primitive integer kernel vectors, one per free column, each zero on
    /// every other free column.
    pub fn kernel(&self) -> Vec<(u32, IntVec)> {
        let free = self.free_cols();
        let mut slot = vec![usize::MAX; self.cols];
        for (k, f) in free.iter().enumerate() {
            slot[*f as usize] = k;
        }
        // column-wise view of the non-pivot part
        let mut by_free: Vec<Vec<(u32, Int, Int)>> = vec![Vec::new(); free.len()];
        for row in &self.rows {
            let (p, pv) = row.leading().unwrap();
            for (c, a) in &row.entries()[1..] {
                let k = slot[*c as usize];
                debug_assert!(k != usize::MAX, "rref row has entry in another pivot column");
                by_free[k].push((p, pv.clone(), a.clone()));
            }
        }
        free.iter()
            .zip(by_free)
            .map(|(&f, deps)| {
                let mut l = Int::ONE;
                for (_, pv, _) in &deps {
                    l = l.lcm(pv);
                }
                let mut pairs: Vec<(u32, Int)> = deps
                    .iter()
                    .map(|(p, pv, a)| (*p, -&(a * &l.div_exact(pv))))
                    .collect();
                pairs.push((f, l));
                (f, IntVec::from_pairs(pairs).primitive_keep_sign(f))
            })
            .collect()
    }
}

impl IntVec {
    /// Divides by the content, choosing the sign that makes entry `at` positive.
    fn primitive_keep_sign(mut self, at: u32) -> IntVec {
        let g = self.content();
        if g.is_zero() {
            return self;
        }
        let g = if self.get(at).is_negative() { -&g } else { g };
        for (_, v) in &mut self.entries {
            *v = v.div_exact(&g);
        }
        self
    }
}
