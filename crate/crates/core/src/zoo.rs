//! Named example structures, relation generators and the exhaustive
//! enumerator of small Ehresmann semigroups.

use crate::error::{Error, Result};
use crate::order::PartialOrder;
use crate::orders::OrderedSemigroup;
use crate::par;
use crate::semigroup::FiniteBiunarySemigroup;

/// A named structure with its attached orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZooEntry {
    pub name: String,
    pub structure: FiniteBiunarySemigroup,
    pub orders: Vec<(String, PartialOrder)>,
    /// What the structure is and which check it is known to pass.
    pub provenance: String,
}

impl ZooEntry {
    pub fn order(&self, name: &str) -> Option<&PartialOrder> {
        self.orders.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    /// The structure with the named order, or the first attached order when
    /// `name` is `None`.
    pub fn ordered(&self, name: Option<&str>) -> Result<OrderedSemigroup> {
        let order = match name {
            Some(name) => self
                .order(name)
                .ok_or_else(|| Error::UnknownName(format!("{}#{name}", self.name)))?,
            None => &self
                .orders
                .first()
                .ok_or_else(|| Error::UnknownName(format!("{} has no attached order", self.name)))?
                .1,
        };
        OrderedSemigroup::new(self.structure.clone(), order.clone())
    }
}

/// Every name accepted by [`by_name`].
pub const NAMES: [&str; 11] = [
    "one-element",
    "two-element-monoid",
    "orderless-band",
    "zero-one-nabla",
    "rel-1",
    "rel-2",
    "rel-3",
    "pt-1",
    "pt-2",
    "pt-3",
    "partial-injections-2",
];

pub fn by_name(name: &str) -> Result<ZooEntry> {
    match name {
        "one-element" => Ok(example_one_element()),
        "two-element-monoid" => Ok(example_two_element_monoid()),
        "orderless-band" => Ok(example_orderless_band()),
        "zero-one-nabla" => Ok(example_zero_one_nabla()),
        "partial-injections-2" => Ok(example_partial_injections()),
        _ => {
            let parse = |prefix: &str| name.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok());
            if let Some(k) = parse("rel-") {
                gen_rel(k)
            } else if let Some(k) = parse("pt-") {
                gen_pt(k)
            } else {
                Err(Error::UnknownName(name.to_string()))
            }
        }
    }
}

pub fn example_one_element() -> ZooEntry {
    let s = FiniteBiunarySemigroup::new(vec![vec![0]], vec![0], vec![0]).expect("valid");
    ZooEntry {
        name: "one-element".into(),
        structure: s,
        orders: vec![("equality".into(), PartialOrder::discrete(1))],
        provenance: "trivial monoid; ordered Ehresmann".into(),
    }
}

/// `{0, 1}` with zero `0`, identity `1`, `D ≡ R ≡ 1`.
pub fn example_two_element_monoid() -> ZooEntry {
    let s = FiniteBiunarySemigroup::new(vec![vec![0, 0], vec![0, 1]], vec![1, 1], vec![1, 1])
        .and_then(|s| s.with_names(["0", "1"]))
        .expect("valid");
    let leq1 = PartialOrder::from_pairs(2, [(1, 0)]).expect("chain");
    ZooEntry {
        name: "two-element-monoid".into(),
        structure: s,
        orders: vec![("leq1".into(), leq1), ("leq2".into(), PartialOrder::discrete(2))],
        provenance: "two-element monoid with zero, D and R constant at the identity; Ehresmann with two orders".into(),
    }
}

/// Six-element band of transformations of `{x, y, z}` carrying no
/// Ehresmann order. Index order is `c, d, Px, Py, Pz, 1`.
pub fn example_orderless_band() -> ZooEntry {
    const C: usize = 0;
    const D: usize = 1;
    const PX: usize = 2;
    const PY: usize = 3;
    const PZ: usize = 4;
    const ONE: usize = 5;
    let rows = vec![
        vec![C, C, PX, PY, PZ, C],
        vec![D, D, PX, PY, PZ, D],
        vec![PX, PX, PX, PY, PZ, PX],
        vec![PY, PY, PX, PY, PZ, PY],
        vec![PX, PY, PX, PY, PZ, PZ],
        vec![C, D, PX, PY, PZ, ONE],
    ];
    let dmap = vec![ONE, ONE, PZ, PZ, PZ, ONE];
    let rmap = vec![ONE, ONE, ONE, ONE, PZ, ONE];
    let s = FiniteBiunarySemigroup::new(rows, dmap, rmap)
        .and_then(|s| s.with_names(["c", "d", "Px", "Py", "Pz", "1"]))
        .expect("valid");
    ZooEntry {
        name: "orderless-band".into(),
        structure: s,
        orders: Vec::new(),
        provenance: "band of transformations on three points; Ehresmann, admits no Ehresmann order".into(),
    }
}

/// Relations on `k` points as `k²`-bit masks; bit `i·k + j` is the pair
/// `(i, j)`.
struct RelCodec {
    k: usize,
}

impl RelCodec {
    fn row(&self, a: usize, i: usize) -> usize {
        (a >> (i * self.k)) & ((1 << self.k) - 1)
    }

    /// Left-to-right composite: `(i, j)` iff `(i, m) ∈ a` and `(m, j) ∈ b`.
    fn compose(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for i in 0..self.k {
            let ra = self.row(a, i);
            let mut row = 0;
            for m in 0..self.k {
                if ra >> m & 1 == 1 {
                    row |= self.row(b, m);
                }
            }
            out |= row << (i * self.k);
        }
        out
    }

    fn diagonal(&self, points: usize) -> usize {
        (0..self.k).filter(|&i| points >> i & 1 == 1).map(|i| 1 << (i * self.k + i)).sum()
    }

    fn domain(&self, a: usize) -> usize {
        self.diagonal((0..self.k).filter(|&i| self.row(a, i) != 0).map(|i| 1 << i).sum())
    }

    fn range(&self, a: usize) -> usize {
        self.diagonal((0..self.k).fold(0, |acc, i| acc | self.row(a, i)))
    }

    fn is_partial_function(&self, a: usize) -> bool {
        (0..self.k).all(|i| self.row(a, i).count_ones() <= 1)
    }

    fn is_partial_injection(&self, a: usize) -> bool {
        self.is_partial_function(a) && {
            let cols: Vec<usize> = (0..self.k).map(|i| self.row(a, i)).filter(|&r| r != 0).collect();
            let union = cols.iter().fold(0, |acc, r| acc | r);
            union.count_ones() as usize == cols.len()
        }
    }

    fn name(&self, a: usize) -> String {
        let pairs: Vec<String> = (0..self.k * self.k)
            .filter(|&bit| a >> bit & 1 == 1)
            .map(|bit| format!("{}{}", bit / self.k + 1, bit % self.k + 1))
            .collect();
        format!("{{{}}}", pairs.join(","))
    }
}

/// The sub-biunary-semigroup of `Rel(k)` on the masks accepted by `keep`,
/// ordered by inclusion. Masks stay in increasing order.
fn relation_structure(k: usize, keep: impl Fn(&RelCodec, usize) -> bool) -> Result<(FiniteBiunarySemigroup, PartialOrder)> {
    if k == 0 {
        return Err(Error::structural("point count must be at least 1"));
    }
    if k > 3 {
        return Err(Error::TooLarge(format!("relations on {k} points")));
    }
    let codec = RelCodec { k };
    let masks: Vec<usize> = (0..1usize << (k * k)).filter(|&a| keep(&codec, a)).collect();
    let mut index = vec![usize::MAX; 1 << (k * k)];
    for (i, &a) in masks.iter().enumerate() {
        index[a] = i;
    }
    let n = masks.len();
    let lookup = |a: usize| {
        let i = index[a];
        (i != usize::MAX).then_some(i).ok_or_else(|| Error::structural("subset is not closed"))
    };
    let rows = par::map(&masks, |&a| masks.iter().map(|&b| lookup(codec.compose(a, b))).collect::<Result<Vec<_>>>());
    let mul = rows.into_iter().collect::<Result<Vec<_>>>()?.concat();
    let dmap = masks.iter().map(|&a| lookup(codec.domain(a))).collect::<Result<Vec<_>>>()?;
    let rmap = masks.iter().map(|&a| lookup(codec.range(a))).collect::<Result<Vec<_>>>()?;
    let s = FiniteBiunarySemigroup::from_flat(n, mul, dmap, rmap)?.with_names(masks.iter().map(|&a| codec.name(a)))?;
    let order = PartialOrder::from_fn(n, |i, j| masks[i] & !masks[j] == 0)?;
    Ok((s, order))
}

/// All binary relations on `k ≤ 3` points under composition, with domain and
/// range projections and inclusion.
pub fn gen_rel(k: usize) -> Result<ZooEntry> {
    let (s, order) = relation_structure(k, |_, _| true)?;
    Ok(ZooEntry {
        name: format!("rel-{k}"),
        structure: s,
        orders: vec![("inclusion".into(), order)],
        provenance: format!("binary relations on {k} points under inclusion; ordered Ehresmann"),
    })
}

/// Partial transformations on `k ≤ 3` points, a subsemigroup of `Rel(k)`.
pub fn gen_pt(k: usize) -> Result<ZooEntry> {
    let (s, order) = relation_structure(k, RelCodec::is_partial_function)?;
    Ok(ZooEntry {
        name: format!("pt-{k}"),
        structure: s,
        orders: vec![("inclusion".into(), order)],
        provenance: format!("partial transformations on {k} points; left restriction with range, functional"),
    })
}

/// Partial bijections on two points: seven elements, a restriction
/// semigroup under inclusion.
pub fn example_partial_injections() -> ZooEntry {
    let (s, order) = relation_structure(2, RelCodec::is_partial_injection).expect("closed");
    ZooEntry {
        name: "partial-injections-2".into(),
        structure: s,
        orders: vec![("inclusion".into(), order)],
        provenance: "partial injections on two points under inclusion; restriction semigroup".into(),
    }
}

/// Empty relation, diagonal and full relation on two points.
pub fn example_zero_one_nabla() -> ZooEntry {
    // masks: ∅ = 0, diagonal = 0b1001, full = 0b1111
    let (s, order) = relation_structure(2, |_, a| matches!(a, 0 | 0b1001 | 0b1111)).expect("closed");
    let s = s.with_names(["0", "1", "nabla"]).expect("distinct");
    ZooEntry {
        name: "zero-one-nabla".into(),
        structure: s,
        orders: vec![("inclusion".into(), order)],
        provenance: "empty, diagonal and full relation on two points under inclusion; ordered Ehresmann".into(),
    }
}

/// Every associative table on `0..n`, in lexicographic order of the
/// row-major table.
pub fn associative_tables(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let first_rows: Vec<Vec<usize>> = (0..n.pow(n as u32))
        .map(|mut i| {
            let mut row = vec![0; n];
            for slot in row.iter_mut().rev() {
                *slot = i % n;
                i /= n;
            }
            row
        })
        .collect();
    par::map(&first_rows, |row| {
        let mut table = vec![None; n * n];
        for (b, &v) in row.iter().enumerate() {
            table[b] = Some(v);
        }
        let mut out = Vec::new();
        if consistent(n, &table) {
            extend(n, &mut table, n, &mut out);
        }
        out
    })
    .concat()
}

fn extend(n: usize, table: &mut [Option<usize>], cell: usize, out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(table.iter().map(|v| v.expect("filled")).collect());
        return;
    }
    for v in 0..n {
        table[cell] = Some(v);
        if consistent(n, table) {
            extend(n, table, cell + 1, out);
        }
    }
    table[cell] = None;
}

/// No associativity violation among the products already fixed.
fn consistent(n: usize, t: &[Option<usize>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = t[a * n + b] else { continue };
            for c in 0..n {
                let (Some(bc), Some(l)) = (t[b * n + c], t[ab * n + c]) else { continue };
                if let Some(r) = t[a * n + bc] {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every Ehresmann semigroup on `0..n`. Labelled structures come sorted by
/// (table, D, R); with `up_to_iso`, one canonical form per class, sorted the
/// same way. `n = 4` requires `allow_n4`.
pub fn enumerate_ehresmann_semigroups(n: usize, up_to_iso: bool, allow_n4: bool) -> Result<Vec<FiniteBiunarySemigroup>> {
    if n == 0 {
        return Err(Error::structural("size must be at least 1"));
    }
    if n > 4 || (n == 4 && !allow_n4) {
        return Err(Error::TooLarge(format!("exhaustive enumeration of size {n}")));
    }
    let tables = associative_tables(n);
    let per_table = par::map(&tables, |mul| {
        let m = |a: usize, b: usize| mul[a * n + b];
        let idempotent = |e: usize| m(e, e) == e;
        let d_options: Vec<Vec<usize>> =
            (0..n).map(|s| (0..n).filter(|&e| idempotent(e) && m(e, s) == s).collect()).collect();
        let r_options: Vec<Vec<usize>> =
            (0..n).map(|s| (0..n).filter(|&e| idempotent(e) && m(s, e) == s).collect()).collect();
        let mut out = Vec::new();
        for dmap in choices(&d_options) {
            for rmap in choices(&r_options) {
                let s = FiniteBiunarySemigroup::from_flat(n, mul.clone(), dmap.clone(), rmap).expect("in range");
                if s.is_ehresmann() {
                    out.push(s);
                }
            }
        }
        out
    });
    let mut all: Vec<FiniteBiunarySemigroup> = per_table.concat();
    if up_to_iso {
        all = par::map(&all, FiniteBiunarySemigroup::canonical_form);
    }
    all.sort_by(|a, b| a.key().cmp(&b.key()));
    all.dedup_by(|a, b| a.key() == b.key());
    Ok(all)
}

/// Cartesian product of per-position options, first position most
/// significant.
fn choices(options: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(options.len())];
    for opts in options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&o| {
                    let mut next = prefix.clone();
                    next.push(o);
                    next
                })
            })
            .collect();
    }
    out
}
