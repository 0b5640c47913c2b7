//! Finite biunary semigroups `(S, ·, D, R)` and the semigroup-side laws.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::law::{InstanceLaw, LawReport};

/// A carrier `0..n` with a total multiplication table and unary maps `D`, `R`.
///
/// Construction only validates that every entry is an index below `n`;
/// associativity and every other law is decided by the checkers, so malformed
/// candidates can be represented and reported on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteBiunarySemigroup {
    n: usize,
    mul: Vec<usize>,
    dmap: Vec<usize>,
    rmap: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    names: Option<Vec<String>>,
}

impl FiniteBiunarySemigroup {
    /// Builds a structure from a row-major table (`rows[a][b] = a·b`).
    pub fn new(rows: Vec<Vec<usize>>, dmap: Vec<usize>, rmap: Vec<usize>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::structural("multiplication table is not square"));
        }
        Self::from_flat(n, rows.into_iter().flatten().collect(), dmap, rmap)
    }

    pub fn from_flat(n: usize, mul: Vec<usize>, dmap: Vec<usize>, rmap: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::structural("carrier must be non-empty"));
        }
        if mul.len() != n * n {
            return Err(Error::structural(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                n * n
            )));
        }
        if dmap.len() != n || rmap.len() != n {
            return Err(Error::structural("D and R must have one entry per element"));
        }
        if let Some(i) = mul.iter().position(|&x| x >= n) {
            return Err(Error::structural(format!(
                "mul({}, {}) = {} is out of range",
                i / n,
                i % n,
                mul[i]
            )));
        }
        for (label, map) in [("D", &dmap), ("R", &rmap)] {
            if let Some(i) = map.iter().position(|&x| x >= n) {
                return Err(Error::structural(format!("{label}({i}) = {} is out of range", map[i])));
            }
        }
        Ok(FiniteBiunarySemigroup { n, mul, dmap, rmap, names: None })
    }

    /// Attaches display names. Names must be distinct and whitespace-free.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.n {
            return Err(Error::structural("one name per element is required"));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a.chars().any(char::is_whitespace) || a == "." {
                return Err(Error::structural(format!("invalid element name {a:?}")));
            }
            if names[..i].contains(a) {
                return Err(Error::structural(format!("duplicate element name {a:?}")));
            }
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn d(&self, a: usize) -> usize {
        self.dmap[a]
    }

    #[inline]
    pub fn r(&self, a: usize) -> usize {
        self.rmap[a]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn dmap(&self) -> &[usize] {
        &self.dmap
    }

    pub fn rmap(&self) -> &[usize] {
        &self.rmap
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        match &self.names {
            Some(names) => names.iter().position(|x| x == name),
            None => name.parse().ok().filter(|&i| i < self.n),
        }
    }

    /// Same structure with one table entry replaced.
    pub fn with_mul(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        let mut mul = self.mul.clone();
        mul[a * self.n + b] = value;
        let s = Self::from_flat(self.n, mul, self.dmap.clone(), self.rmap.clone())?;
        Ok(Self { names: self.names.clone(), ..s })
    }

    pub fn with_d(&self, a: usize, value: usize) -> Result<Self> {
        let mut dmap = self.dmap.clone();
        dmap[a] = value;
        let s = Self::from_flat(self.n, self.mul.clone(), dmap, self.rmap.clone())?;
        Ok(Self { names: self.names.clone(), ..s })
    }

    pub fn with_r(&self, a: usize, value: usize) -> Result<Self> {
        let mut rmap = self.rmap.clone();
        rmap[a] = value;
        let s = Self::from_flat(self.n, self.mul.clone(), self.dmap.clone(), rmap)?;
        Ok(Self { names: self.names.clone(), ..s })
    }

    /// Membership in the image of `D`.
    pub fn is_projection(&self, a: usize) -> bool {
        self.dmap.contains(&a)
    }

    /// Sorted image of `D`.
    pub fn d_image(&self) -> Vec<usize> {
        let mut v = self.dmap.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn r_image(&self) -> Vec<usize> {
        let mut v = self.rmap.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Relabels along `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut mul = vec![0; n * n];
        let mut dmap = vec![0; n];
        let mut rmap = vec![0; n];
        for a in 0..n {
            dmap[perm[a]] = perm[self.d(a)];
            rmap[perm[a]] = perm[self.r(a)];
            for b in 0..n {
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let names = self.names.as_ref().map(|names| {
            let mut out = vec![String::new(); n];
            for a in 0..n {
                out[perm[a]] = names[a].clone();
            }
            out
        });
        FiniteBiunarySemigroup { n, mul, dmap, rmap, names }
    }

    /// Tables only, for comparisons that must ignore names.
    pub fn same_tables(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul && self.dmap == other.dmap && self.rmap == other.rmap
    }

    /// Bijections of the carrier preserving `·`, `D` and `R`, in
    /// lexicographic order. The identity is always first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        isomorphisms(self, self, usize::MAX)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n && !isomorphisms(self, other, 1).is_empty()
    }

    /// Least relabelling under the order (mul, D, R) over all permutations.
    /// Exhaustive over `n!` permutations; intended for small carriers.
    pub fn canonical_form(&self) -> Self {
        let base = self.clone().without_names();
        let mut best: Option<Self> = None;
        for perm in permutations(self.n) {
            let cand = base.relabel(&perm);
            if best.as_ref().is_none_or(|b| cand.key() < b.key()) {
                best = Some(cand);
            }
        }
        best.expect("at least one permutation")
    }

    pub(crate) fn key(&self) -> (&[usize], &[usize], &[usize]) {
        (&self.mul, &self.dmap, &self.rmap)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(perm.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("pivot");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Per-element invariants preserved by isomorphisms, used to prune the search.
fn signature(s: &FiniteBiunarySemigroup, a: usize) -> [usize; 6] {
    let n = s.len();
    let left_units = (0..n).filter(|&x| s.mul(x, a) == a).count();
    let right_units = (0..n).filter(|&x| s.mul(a, x) == a).count();
    let d_fibre = (0..n).filter(|&x| s.d(x) == a).count();
    let r_fibre = (0..n).filter(|&x| s.r(x) == a).count();
    [
        usize::from(s.mul(a, a) == a),
        usize::from(s.d(a) == a),
        left_units,
        right_units,
        d_fibre,
        r_fibre,
    ]
}

/// Isomorphisms `a → b` in lexicographic order, at most `limit` of them.
fn isomorphisms(
    a: &FiniteBiunarySemigroup,
    b: &FiniteBiunarySemigroup,
    limit: usize,
) -> Vec<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return Vec::new();
    }
    let sig_a: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();

    fn consistent(a: &FiniteBiunarySemigroup, b: &FiniteBiunarySemigroup, map: &[usize], x: usize) -> bool {
        let assigned = |y: usize| map[y] != usize::MAX;
        for y in 0..a.len() {
            if !assigned(y) {
                continue;
            }
            for (p, q) in [(x, y), (y, x)] {
                let prod = a.mul(p, q);
                if assigned(prod) && map[prod] != b.mul(map[p], map[q]) {
                    return false;
                }
            }
            for (src, img) in [(a.d(y), b.d(map[y])), (a.r(y), b.r(map[y]))] {
                if assigned(src) && map[src] != img {
                    return false;
                }
            }
        }
        true
    }

    struct Search<'a> {
        a: &'a FiniteBiunarySemigroup,
        b: &'a FiniteBiunarySemigroup,
        sig_a: Vec<[usize; 6]>,
        sig_b: Vec<[usize; 6]>,
        limit: usize,
    }

    impl Search<'_> {
        fn go(&self, x: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if out.len() >= self.limit {
                return;
            }
            if x == self.a.len() {
                out.push(map.clone());
                return;
            }
            for y in 0..self.b.len() {
                if used[y] || self.sig_a[x] != self.sig_b[y] {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                if consistent(self.a, self.b, map, x) {
                    self.go(x + 1, map, used, out);
                }
                used[y] = false;
                map[x] = usize::MAX;
            }
        }
    }

    Search { a, b, sig_a, sig_b, limit }.go(0, &mut map, &mut used, &mut out);
    out
}

/// The projections `D(S)` of a localisable semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionSet {
    pub members: Vec<usize>,
}

impl ProjectionSet {
    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Semigroup-side laws, each evaluated one instance at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemigroupLaw {
    /// `(ab)c = a(bc)`
    Associativity,
    /// `D(s)s = s`
    L1a,
    /// `sR(s) = s`
    L1b,
    /// `D(R(s)) = R(s)`
    L2a,
    /// `R(D(s)) = D(s)`
    L2b,
    /// `D(st) = D(sD(t))`
    L3a,
    /// `R(st) = R(R(s)t)`
    L3b,
    /// `D(D(s)D(t)) = D(s)D(t)`
    L4,
    /// `D(s)D(t) = D(t)D(s)`
    ProjectionsCommute,
    /// `sD(t) = D(st)s`
    LeftRestriction,
    /// `R(t)s = sR(ts)`
    RightRestriction,
    /// `st = su ⟹ R(s)t = R(s)u`
    Functional,
    /// `set = D(set)stR(set)` for projections `e`; instance order `(s, e, t)`.
    DeBarros,
}

impl SemigroupLaw {
    pub const ALL: [SemigroupLaw; 13] = [
        SemigroupLaw::Associativity,
        SemigroupLaw::L1a,
        SemigroupLaw::L1b,
        SemigroupLaw::L2a,
        SemigroupLaw::L2b,
        SemigroupLaw::L3a,
        SemigroupLaw::L3b,
        SemigroupLaw::L4,
        SemigroupLaw::ProjectionsCommute,
        SemigroupLaw::LeftRestriction,
        SemigroupLaw::RightRestriction,
        SemigroupLaw::Functional,
        SemigroupLaw::DeBarros,
    ];

    pub const LOCALISABLE: [SemigroupLaw; 7] = [
        SemigroupLaw::L1a,
        SemigroupLaw::L1b,
        SemigroupLaw::L2a,
        SemigroupLaw::L2b,
        SemigroupLaw::L3a,
        SemigroupLaw::L3b,
        SemigroupLaw::L4,
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == name)
    }
}

impl InstanceLaw<FiniteBiunarySemigroup> for SemigroupLaw {
    fn name(&self) -> &'static str {
        match self {
            SemigroupLaw::Associativity => "associativity",
            SemigroupLaw::L1a => "L1a",
            SemigroupLaw::L1b => "L1b",
            SemigroupLaw::L2a => "L2a",
            SemigroupLaw::L2b => "L2b",
            SemigroupLaw::L3a => "L3a",
            SemigroupLaw::L3b => "L3b",
            SemigroupLaw::L4 => "L4",
            SemigroupLaw::ProjectionsCommute => "projections-commute",
            SemigroupLaw::LeftRestriction => "left-restriction-law",
            SemigroupLaw::RightRestriction => "right-restriction-law",
            SemigroupLaw::Functional => "functional-law",
            SemigroupLaw::DeBarros => "de-barros-law",
        }
    }

    fn arity(&self) -> usize {
        match self {
            SemigroupLaw::L1a | SemigroupLaw::L1b | SemigroupLaw::L2a | SemigroupLaw::L2b => 1,
            SemigroupLaw::L3a
            | SemigroupLaw::L3b
            | SemigroupLaw::L4
            | SemigroupLaw::ProjectionsCommute
            | SemigroupLaw::LeftRestriction
            | SemigroupLaw::RightRestriction => 2,
            SemigroupLaw::Associativity | SemigroupLaw::Functional | SemigroupLaw::DeBarros => 3,
        }
    }

    fn holds_at(&self, s: &FiniteBiunarySemigroup, w: &[usize]) -> bool {
        let (d, r) = (|x| s.d(x), |x| s.r(x));
        let m = |x, y| s.mul(x, y);
        match *self {
            SemigroupLaw::Associativity => m(m(w[0], w[1]), w[2]) == m(w[0], m(w[1], w[2])),
            SemigroupLaw::L1a => m(d(w[0]), w[0]) == w[0],
            SemigroupLaw::L1b => m(w[0], r(w[0])) == w[0],
            SemigroupLaw::L2a => d(r(w[0])) == r(w[0]),
            SemigroupLaw::L2b => r(d(w[0])) == d(w[0]),
            SemigroupLaw::L3a => d(m(w[0], w[1])) == d(m(w[0], d(w[1]))),
            SemigroupLaw::L3b => r(m(w[0], w[1])) == r(m(r(w[0]), w[1])),
            SemigroupLaw::L4 => {
                let p = m(d(w[0]), d(w[1]));
                d(p) == p
            }
            SemigroupLaw::ProjectionsCommute => {
                m(d(w[0]), d(w[1])) == m(d(w[1]), d(w[0]))
            }
            SemigroupLaw::LeftRestriction => {
                let (a, b) = (w[0], w[1]);
                m(a, d(b)) == m(d(m(a, b)), a)
            }
            SemigroupLaw::RightRestriction => {
                let (a, b) = (w[0], w[1]);
                m(r(b), a) == m(a, r(m(b, a)))
            }
            SemigroupLaw::Functional => {
                let (a, b, c) = (w[0], w[1], w[2]);
                m(a, b) != m(a, c) || m(r(a), b) == m(r(a), c)
            }
            SemigroupLaw::DeBarros => {
                let (a, e, b) = (w[0], w[1], w[2]);
                if !s.is_projection(e) {
                    return true;
                }
                let set = s.mul3(a, e, b);
                set == m(m(d(set), m(a, b)), r(set))
            }
        }
    }

    fn describe(&self, s: &FiniteBiunarySemigroup, w: &[usize]) -> String {
        let nm = |x: usize| s.name(x);
        let (d, r) = (|x| s.d(x), |x| s.r(x));
        let m = |x, y| s.mul(x, y);
        match *self {
            SemigroupLaw::Associativity => {
                let (a, b, c) = (w[0], w[1], w[2]);
                format!(
                    "({a}{b}){c} = {} but {a}({b}{c}) = {}",
                    nm(m(m(a, b), c)),
                    nm(m(a, m(b, c))),
                    a = nm(a),
                    b = nm(b),
                    c = nm(c)
                )
            }
            SemigroupLaw::L1a => format!("D({a}){a} = {} ≠ {a}", nm(m(d(w[0]), w[0])), a = nm(w[0])),
            SemigroupLaw::L1b => format!("{a}R({a}) = {} ≠ {a}", nm(m(w[0], r(w[0]))), a = nm(w[0])),
            SemigroupLaw::L2a => format!("D(R({})) = {} ≠ {}", nm(w[0]), nm(d(r(w[0]))), nm(r(w[0]))),
            SemigroupLaw::L2b => format!("R(D({})) = {} ≠ {}", nm(w[0]), nm(r(d(w[0]))), nm(d(w[0]))),
            SemigroupLaw::L3a => format!(
                "D({a}{b}) = {} but D({a}D({b})) = {}",
                nm(d(m(w[0], w[1]))),
                nm(d(m(w[0], d(w[1])))),
                a = nm(w[0]),
                b = nm(w[1])
            ),
            SemigroupLaw::L3b => format!(
                "R({a}{b}) = {} but R(R({a}){b}) = {}",
                nm(r(m(w[0], w[1]))),
                nm(r(m(r(w[0]), w[1]))),
                a = nm(w[0]),
                b = nm(w[1])
            ),
            SemigroupLaw::L4 => {
                let p = m(d(w[0]), d(w[1]));
                format!("D(D({})D({})) = {} ≠ {}", nm(w[0]), nm(w[1]), nm(d(p)), nm(p))
            }
            SemigroupLaw::ProjectionsCommute => format!(
                "D({a})D({b}) = {} ≠ {} = D({b})D({a})",
                nm(m(d(w[0]), d(w[1]))),
                nm(m(d(w[1]), d(w[0]))),
                a = nm(w[0]),
                b = nm(w[1])
            ),
            SemigroupLaw::LeftRestriction => format!(
                "{a}D({b}) = {} ≠ {} = D({a}{b}){a}",
                nm(m(w[0], d(w[1]))),
                nm(m(d(m(w[0], w[1])), w[0])),
                a = nm(w[0]),
                b = nm(w[1])
            ),
            SemigroupLaw::RightRestriction => format!(
                "R({b}){a} = {} ≠ {} = {a}R({b}{a})",
                nm(m(r(w[1]), w[0])),
                nm(m(w[0], r(m(w[1], w[0])))),
                a = nm(w[0]),
                b = nm(w[1])
            ),
            SemigroupLaw::Functional => format!(
                "{a}{b} = {a}{c} = {} but R({a}){b} = {} ≠ {} = R({a}){c}",
                nm(m(w[0], w[1])),
                nm(m(r(w[0]), w[1])),
                nm(m(r(w[0]), w[2])),
                a = nm(w[0]),
                b = nm(w[1]),
                c = nm(w[2])
            ),
            SemigroupLaw::DeBarros => {
                let (a, e, b) = (w[0], w[1], w[2]);
                let set = s.mul3(a, e, b);
                format!(
                    "s={}, e={}, t={}: set = {} ≠ {} = D(set)stR(set)",
                    nm(a),
                    nm(e),
                    nm(b),
                    nm(set),
                    nm(m(m(d(set), m(a, b)), r(set)))
                )
            }
        }
    }
}

impl FiniteBiunarySemigroup {
    pub fn check_law(&self, law: SemigroupLaw) -> LawReport {
        law.check(self, self.n)
    }

    pub fn check_associativity(&self) -> LawReport {
        self.check_law(SemigroupLaw::Associativity)
    }

    /// Laws L1–L4. Associativity is part of the verdict since the laws are
    /// only meaningful on a semigroup.
    pub fn check_localisable(&self) -> LawReport {
        LawReport::all(
            "localisable",
            std::iter::once(SemigroupLaw::Associativity)
                .chain(SemigroupLaw::LOCALISABLE)
                .map(|l| self.check_law(l)),
        )
    }

    pub fn check_ehresmann(&self) -> LawReport {
        LawReport::all(
            "ehresmann",
            [self.check_localisable(), self.check_law(SemigroupLaw::ProjectionsCommute)],
        )
    }

    pub fn is_ehresmann(&self) -> bool {
        self.check_ehresmann().holds
    }

    /// The projection set, validated: `D(S) = R(S)`, every member idempotent
    /// and the set closed under multiplication.
    pub fn projections(&self) -> Result<ProjectionSet> {
        let members = self.d_image();
        if members != self.r_image() {
            return Err(Error::InconsistentProjections(format!(
                "D-image {:?} differs from R-image {:?}",
                members,
                self.r_image()
            )));
        }
        for &e in &members {
            if self.mul(e, e) != e {
                return Err(Error::InconsistentProjections(format!(
                    "projection {} is not idempotent",
                    self.name(e)
                )));
            }
            for &f in &members {
                if members.binary_search(&self.mul(e, f)).is_err() {
                    return Err(Error::InconsistentProjections(format!(
                        "product {}{} leaves the projection set",
                        self.name(e),
                        self.name(f)
                    )));
                }
            }
        }
        Ok(ProjectionSet { members })
    }

    pub fn check_left_restriction_with_range(&self) -> LawReport {
        LawReport::all(
            "left-restriction",
            [self.check_ehresmann(), self.check_law(SemigroupLaw::LeftRestriction)],
        )
    }

    /// Right restriction with domain, using the law `R(t)s = sR(ts)`.
    pub fn check_right_restriction_with_domain(&self) -> LawReport {
        LawReport::all(
            "right-restriction",
            [self.check_ehresmann(), self.check_law(SemigroupLaw::RightRestriction)],
        )
    }

    pub fn check_restriction(&self) -> LawReport {
        LawReport::all(
            "restriction",
            [self.check_left_restriction_with_range(), self.check_right_restriction_with_domain()],
        )
    }

    /// The functional quasi-identity over all triples. Outside left
    /// restriction semigroups with range the verdict is still computed but
    /// flagged.
    pub fn check_functional(&self) -> LawReport {
        let report = self.check_law(SemigroupLaw::Functional).renamed("functional");
        if self.check_left_restriction_with_range().holds {
            report
        } else {
            report.with_note("not applicable: functional is defined for left restriction semigroups with range")
        }
    }

    pub fn check_de_barros_equational(&self) -> LawReport {
        LawReport::all(
            "de-barros-equational",
            [self.check_ehresmann(), self.check_law(SemigroupLaw::DeBarros)],
        )
    }

    /// Ehresmann semigroup homomorphism: preserves `·`, `D` and `R`.
    pub fn check_ehresmann_hom(&self, f: &HomCandidate, target: &FiniteBiunarySemigroup) -> LawReport {
        if let Err(e) = f.validate(self.n, target.len()) {
            return LawReport::fail("ehresmann-hom", e.to_string()).with_clause("total");
        }
        let map = &f.map;
        if let Some(w) = crate::law::first_failure(self.n, 2, |w| {
            map[self.mul(w[0], w[1])] == target.mul(map[w[0]], map[w[1]])
        }) {
            let detail = format!(
                "({}·{})F = {} but {}F·{}F = {}",
                self.name(w[0]),
                self.name(w[1]),
                target.name(map[self.mul(w[0], w[1])]),
                self.name(w[0]),
                self.name(w[1]),
                target.name(target.mul(map[w[0]], map[w[1]]))
            );
            return LawReport::fail("ehresmann-hom", detail).with_clause("mul").with_witness(w);
        }
        for (clause, src, tgt) in [
            ("D", self.dmap.as_slice(), target.dmap.as_slice()),
            ("R", self.rmap.as_slice(), target.rmap.as_slice()),
        ] {
            if let Some(a) = (0..self.n).find(|&a| map[src[a]] != tgt[map[a]]) {
                let detail = format!(
                    "{clause}({})F = {} but {clause}({}F) = {}",
                    self.name(a),
                    target.name(map[src[a]]),
                    self.name(a),
                    target.name(tgt[map[a]])
                );
                return LawReport::fail("ehresmann-hom", detail).with_clause(clause).with_witness(vec![a]);
            }
        }
        LawReport::pass("ehresmann-hom")
    }
}

/// A candidate map between two carriers, `map[i]` being the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCandidate {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
}

impl HomCandidate {
    pub fn new(map: Vec<usize>) -> Self {
        HomCandidate { source: String::from("S"), target: String::from("T"), map }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect())
    }

    pub fn validate(&self, source_len: usize, target_len: usize) -> Result<()> {
        if self.map.len() != source_len {
            return Err(Error::structural(format!(
                "map has {} entries for a source of {} elements",
                self.map.len(),
                source_len
            )));
        }
        if let Some(i) = self.map.iter().position(|&x| x >= target_len) {
            return Err(Error::structural(format!("image of {i} is out of range")));
        }
        Ok(())
    }
}
