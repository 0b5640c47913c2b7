//! Ordered Ehresmann semigroups: the derived orders `≤ₗ`, `≤ᵣ`, `≤ₑ`, the
//! Ehresmann-order axioms OS1–OS3, OS6, OSI, the optional properties OS4,
//! OS4A, OS4B, OS7, and the exhaustive search for Ehresmann orders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::law::{first_failure, InstanceLaw, LawReport};
use crate::order::PartialOrder;
use crate::par;
use crate::semigroup::{FiniteBiunarySemigroup, HomCandidate};

/// A biunary semigroup paired with a partial order. Nothing beyond matching
/// carrier sizes is assumed; the OS laws are checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedSemigroup {
    pub base: FiniteBiunarySemigroup,
    pub order: PartialOrder,
}

impl OrderedSemigroup {
    pub fn new(base: FiniteBiunarySemigroup, order: PartialOrder) -> Result<Self> {
        if base.len() != order.len() {
            return Err(Error::structural(format!(
                "order on {} elements paired with a semigroup on {}",
                order.len(),
                base.len()
            )));
        }
        Ok(OrderedSemigroup { base, order })
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn check_law(&self, law: OrderLaw) -> LawReport {
        law.check(self, self.len())
    }

    /// OS1 (localisable poset), OS2, OS3, OS6 and OSI.
    pub fn check_ehresmann_order(&self) -> LawReport {
        let os1 = self.base.check_localisable();
        if !os1.holds {
            return LawReport::all("ehresmann-order", [os1.renamed("OS1")]);
        }
        LawReport::all(
            "ehresmann-order",
            [OrderLaw::Os2, OrderLaw::Os3, OrderLaw::Os6, OrderLaw::Osi].map(|l| self.check_law(l)),
        )
    }

    pub fn is_ehresmann_order(&self) -> bool {
        self.check_ehresmann_order().holds
    }

    /// One of OS4, OS4A, OS4B, OS7.
    pub fn check_os_property(&self, law: OrderLaw) -> LawReport {
        self.check_law(law)
    }

    /// On projections, `e ≤ f` iff `e = ef`.
    pub fn semilattice_order_agreement(&self) -> LawReport {
        self.check_law(OrderLaw::SemilatticeAgreement)
    }

    /// `≤ₑ ⊆ ≤`.
    pub fn leq_e_containment(&self) -> Result<LawReport> {
        let derived = derive_orders(&self.base)?;
        Ok(match derived.leq_e.first_pair_missing_from(&self.order) {
            None => LawReport::pass("leq-e-containment"),
            Some((a, b)) => LawReport::fail(
                "leq-e-containment",
                format!("{} ≤ₑ {} but not {0} ≤ {1}", self.base.name(a), self.base.name(b)),
            )
            .with_witness(vec![a, b]),
        })
    }

    /// Whether the order is exactly `≤ₑ`.
    pub fn order_is_leq_e(&self) -> Result<bool> {
        Ok(derive_orders(&self.base)?.leq_e == self.order)
    }
}

/// Order laws on an ordered semigroup, one instance at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderLaw {
    /// `a ≤ b ⟹ D(a) ≤ D(b) ∧ R(a) ≤ R(b)`
    Os2,
    /// `a ≤ b ∧ c ≤ d ⟹ ac ≤ bd`
    Os3,
    /// `ae ≤ a` and `ea ≤ a` for projections `e`; instance `(a, e)`
    Os6,
    /// `a ≤ e ∈ D(S) ⟹ a ∈ D(S)`; instance `(a, e)`
    Osi,
    /// `s ≤ t`, `D(s) = D(t)`, `R(s) = R(t)` ⟹ `s = t`
    Os4,
    /// `s ≤ t`, `D(s) = D(t)` ⟹ `s = t`
    Os4a,
    /// `s ≤ t`, `R(s) = R(t)` ⟹ `s = t`
    Os4b,
    /// `u ≤ st` ⟹ `u = s't'` for some `s' ≤ s`, `t' ≤ t`; instance `(u, s, t)`
    Os7,
    /// For projections `e`, `f`: `e ≤ f ⟺ e = ef`
    SemilatticeAgreement,
}

impl OrderLaw {
    pub const ALL: [OrderLaw; 9] = [
        OrderLaw::Os2,
        OrderLaw::Os3,
        OrderLaw::Os6,
        OrderLaw::Osi,
        OrderLaw::Os4,
        OrderLaw::Os4a,
        OrderLaw::Os4b,
        OrderLaw::Os7,
        OrderLaw::SemilatticeAgreement,
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name().eq_ignore_ascii_case(name))
    }
}

impl InstanceLaw<OrderedSemigroup> for OrderLaw {
    fn name(&self) -> &'static str {
        match self {
            OrderLaw::Os2 => "OS2",
            OrderLaw::Os3 => "OS3",
            OrderLaw::Os6 => "OS6",
            OrderLaw::Osi => "OSI",
            OrderLaw::Os4 => "OS4",
            OrderLaw::Os4a => "OS4A",
            OrderLaw::Os4b => "OS4B",
            OrderLaw::Os7 => "OS7",
            OrderLaw::SemilatticeAgreement => "semilattice-agreement",
        }
    }

    fn arity(&self) -> usize {
        match self {
            OrderLaw::Os3 => 4,
            OrderLaw::Os7 => 3,
            _ => 2,
        }
    }

    fn holds_at(&self, os: &OrderedSemigroup, w: &[usize]) -> bool {
        let s = &os.base;
        let leq = |a, b| os.leq(a, b);
        match *self {
            OrderLaw::Os2 => !leq(w[0], w[1]) || (leq(s.d(w[0]), s.d(w[1])) && leq(s.r(w[0]), s.r(w[1]))),
            OrderLaw::Os3 => {
                !(leq(w[0], w[1]) && leq(w[2], w[3])) || leq(s.mul(w[0], w[2]), s.mul(w[1], w[3]))
            }
            OrderLaw::Os6 => {
                let (a, e) = (w[0], w[1]);
                !s.is_projection(e) || (leq(s.mul(a, e), a) && leq(s.mul(e, a), a))
            }
            OrderLaw::Osi => {
                let (a, e) = (w[0], w[1]);
                !(s.is_projection(e) && leq(a, e)) || s.is_projection(a)
            }
            OrderLaw::Os4 => {
                let (a, b) = (w[0], w[1]);
                !(leq(a, b) && s.d(a) == s.d(b) && s.r(a) == s.r(b)) || a == b
            }
            OrderLaw::Os4a => {
                let (a, b) = (w[0], w[1]);
                !(leq(a, b) && s.d(a) == s.d(b)) || a == b
            }
            OrderLaw::Os4b => {
                let (a, b) = (w[0], w[1]);
                !(leq(a, b) && s.r(a) == s.r(b)) || a == b
            }
            OrderLaw::Os7 => {
                let (u, a, b) = (w[0], w[1], w[2]);
                if !leq(u, s.mul(a, b)) {
                    return true;
                }
                let n = s.len();
                (0..n).any(|a2| leq(a2, a) && (0..n).any(|b2| leq(b2, b) && s.mul(a2, b2) == u))
            }
            OrderLaw::SemilatticeAgreement => {
                let (e, f) = (w[0], w[1]);
                !(s.is_projection(e) && s.is_projection(f)) || leq(e, f) == (e == s.mul(e, f))
            }
        }
    }

    fn describe(&self, os: &OrderedSemigroup, w: &[usize]) -> String {
        let s = &os.base;
        let nm = |x: usize| s.name(x);
        match *self {
            OrderLaw::Os2 => format!(
                "{} ≤ {} but D/R not monotone: D = ({}, {}), R = ({}, {})",
                nm(w[0]),
                nm(w[1]),
                nm(s.d(w[0])),
                nm(s.d(w[1])),
                nm(s.r(w[0])),
                nm(s.r(w[1]))
            ),
            OrderLaw::Os3 => format!(
                "{} ≤ {} and {} ≤ {} but {} ≰ {}",
                nm(w[0]),
                nm(w[1]),
                nm(w[2]),
                nm(w[3]),
                nm(s.mul(w[0], w[2])),
                nm(s.mul(w[1], w[3]))
            ),
            OrderLaw::Os6 => format!(
                "a={}, e={}: ae = {}, ea = {}, not both below a",
                nm(w[0]),
                nm(w[1]),
                nm(s.mul(w[0], w[1])),
                nm(s.mul(w[1], w[0]))
            ),
            OrderLaw::Osi => format!("{} ≤ projection {} but is not a projection", nm(w[0]), nm(w[1])),
            OrderLaw::Os4 | OrderLaw::Os4a | OrderLaw::Os4b => {
                format!("{} < {} with matching domain/range data", nm(w[0]), nm(w[1]))
            }
            OrderLaw::Os7 => format!(
                "{} ≤ {}·{} = {} but no s' ≤ {1}, t' ≤ {2} has s't' = {0}",
                nm(w[0]),
                nm(w[1]),
                nm(w[2]),
                nm(s.mul(w[1], w[2]))
            ),
            OrderLaw::SemilatticeAgreement => format!(
                "projections {}, {}: order says {}, product {}{} = {}",
                nm(w[0]),
                nm(w[1]),
                os.leq(w[0], w[1]),
                nm(w[0]),
                nm(w[1]),
                nm(s.mul(w[0], w[1]))
            ),
        }
    }
}

/// `≤ₗ`, `≤ᵣ` and their permuting join `≤ₑ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedOrders {
    pub leq_l: PartialOrder,
    pub leq_r: PartialOrder,
    pub leq_e: PartialOrder,
}

impl DerivedOrders {
    pub fn get(&self, which: char) -> Option<&PartialOrder> {
        match which {
            'l' => Some(&self.leq_l),
            'r' => Some(&self.leq_r),
            'e' => Some(&self.leq_e),
            _ => None,
        }
    }
}

/// `a ≤ₗ b ⟺ a = D(a)b`, `a ≤ᵣ b ⟺ a = bR(a)`, `a ≤ₑ b ⟺ a = D(a)bR(a)`.
///
/// Fails with [`Error::InternalInconsistency`] if a derived relation is not a
/// partial order or `≤ₑ` differs from either composite of `≤ₗ` and `≤ᵣ`;
/// neither can happen on an Ehresmann semigroup.
pub fn derive_orders(s: &FiniteBiunarySemigroup) -> Result<DerivedOrders> {
    let n = s.len();
    let wrap = |label: &str, r: Result<PartialOrder>| {
        r.map_err(|e| Error::InternalInconsistency(format!("{label} is not a partial order: {e}")))
    };
    let leq_l = wrap("≤ₗ", PartialOrder::from_fn(n, |a, b| a == s.mul(s.d(a), b)))?;
    let leq_r = wrap("≤ᵣ", PartialOrder::from_fn(n, |a, b| a == s.mul(b, s.r(a))))?;
    let leq_e = wrap("≤ₑ", PartialOrder::from_fn(n, |a, b| a == s.mul3(s.d(a), b, s.r(a))))?;
    if leq_l.compose(&leq_r) != leq_e.matrix() || leq_r.compose(&leq_l) != leq_e.matrix() {
        return Err(Error::InternalInconsistency(
            "≤ₑ differs from the composite of ≤ₗ and ≤ᵣ".into(),
        ));
    }
    Ok(DerivedOrders { leq_l, leq_r, leq_e })
}

fn require_ehresmann(s: &FiniteBiunarySemigroup) -> Result<()> {
    let r = s.check_ehresmann();
    if r.holds {
        Ok(())
    } else {
        Err(Error::NotOrderedEhresmann(format!(
            "base is not Ehresmann ({}): {}",
            r.clause.unwrap_or_default(),
            r.detail
        )))
    }
}

/// Verdicts of OS1, OS2, OS6, OSI and OS3 for `≤ₑ`, in that order. The first
/// four always hold on an Ehresmann semigroup; OS3 is the de Barros test.
pub fn check_leq_e_partial_laws(s: &FiniteBiunarySemigroup) -> Result<Vec<LawReport>> {
    require_ehresmann(s)?;
    let os = OrderedSemigroup::new(s.clone(), derive_orders(s)?.leq_e)?;
    Ok(vec![
        s.check_localisable().renamed("OS1"),
        os.check_law(OrderLaw::Os2),
        os.check_law(OrderLaw::Os6),
        os.check_law(OrderLaw::Osi),
        os.check_law(OrderLaw::Os3),
    ])
}

/// De Barros: `≤ₑ` satisfies OS3. Cross-checked against the equational
/// characterisation `set = D(set)stR(set)`.
pub fn is_de_barros(s: &FiniteBiunarySemigroup) -> Result<LawReport> {
    let ehr = s.check_ehresmann();
    if !ehr.holds {
        return Ok(LawReport::all("de-barros", [ehr]));
    }
    let os = OrderedSemigroup::new(s.clone(), derive_orders(s)?.leq_e)?;
    let via_order = os.check_law(OrderLaw::Os3);
    let via_equation = s.check_de_barros_equational();
    if via_order.holds != via_equation.holds {
        return Err(Error::InternalInconsistency(format!(
            "≤ₑ-OS3 verdict {} disagrees with the equational verdict {}",
            via_order.holds, via_equation.holds
        )));
    }
    Ok(via_order.renamed("de-barros"))
}

/// In a de Barros semigroup, `≤ₑ` is an Ehresmann order contained in every
/// Ehresmann order.
pub fn smallest_order_check(s: &FiniteBiunarySemigroup) -> Result<LawReport> {
    let db = is_de_barros(s)?;
    if !db.holds {
        return Ok(LawReport::all("smallest-order", [db]));
    }
    let leq_e = derive_orders(s)?.leq_e;
    let orders = enumerate_ehresmann_orders(s, false)?;
    if !orders.contains(&leq_e) {
        return Ok(LawReport::fail("smallest-order", "≤ₑ is not among the Ehresmann orders"));
    }
    for (i, q) in orders.iter().enumerate() {
        if let Some((a, b)) = leq_e.first_pair_missing_from(q) {
            return Ok(LawReport::fail(
                "smallest-order",
                format!("enumerated order #{i} lacks {} ≤ₑ {}", s.name(a), s.name(b)),
            )
            .with_witness(vec![a, b]));
        }
    }
    Ok(LawReport::pass("smallest-order"))
}

/// Ordered Ehresmann semigroup homomorphism: preserves `·`, `D`, `R` and `≤`.
pub fn is_ordered_hom(f: &HomCandidate, src: &OrderedSemigroup, tgt: &OrderedSemigroup) -> LawReport {
    let hom = src.base.check_ehresmann_hom(f, &tgt.base).renamed("ordered-hom");
    if !hom.holds {
        return hom;
    }
    let map = &f.map;
    match first_failure(src.len(), 2, |w| !src.leq(w[0], w[1]) || tgt.leq(map[w[0]], map[w[1]])) {
        None => LawReport::pass("ordered-hom"),
        Some(w) => LawReport::fail(
            "ordered-hom",
            format!(
                "{} ≤ {} but {}F = {} ≰ {} = {}F",
                src.base.name(w[0]),
                src.base.name(w[1]),
                src.base.name(w[0]),
                tgt.base.name(map[w[0]]),
                tgt.base.name(map[w[1]]),
                src.base.name(w[1])
            ),
        )
        .with_clause("order")
        .with_witness(w),
    }
}

/// Every Ehresmann order on `s`, sorted by matrix. With `up_to_iso`, one
/// representative (the least image) per orbit under the automorphisms of
/// the biunary semigroup.
///
/// The search starts from `≤ₑ`, which every Ehresmann order contains, and
/// decides pairs one at a time. Adding a pair propagates transitivity, OS2
/// and OS3; a branch dies as soon as the closure breaks antisymmetry or OSI
/// or re-adds an excluded pair. Every surviving leaf is closed under the
/// axioms, so it is an Ehresmann order.
pub fn enumerate_ehresmann_orders(s: &FiniteBiunarySemigroup, up_to_iso: bool) -> Result<Vec<PartialOrder>> {
    require_ehresmann(s)?;
    let n = s.len();
    let search = OrderSearch { s, n, proj: (0..n).map(|a| s.is_projection(a)).collect() };
    let mut rel = vec![false; n * n];
    for a in 0..n {
        rel[a * n + a] = true;
    }
    let floor = derive_orders(s)?.leq_e;
    let excluded = vec![false; n * n];
    let mut orders = if search.close(&mut rel, floor.strict_pairs(), &excluded) {
        search.run(rel, excluded, 0)
    } else {
        Vec::new()
    };
    let mut out = Vec::with_capacity(orders.len());
    for rel in orders.drain(..) {
        let order = PartialOrder::from_matrix(n, rel)
            .map_err(|e| Error::InternalInconsistency(format!("search produced a non-order: {e}")))?;
        let os = OrderedSemigroup::new(s.clone(), order)?;
        if !os.is_ehresmann_order() {
            return Err(Error::InternalInconsistency(
                "search produced an order failing the Ehresmann-order laws".into(),
            ));
        }
        out.push(os.order);
    }
    out.sort();
    if up_to_iso {
        let autos = s.automorphisms();
        let mut reps: Vec<PartialOrder> = out
            .iter()
            .map(|o| autos.iter().map(|p| o.relabel(p)).min().expect("identity automorphism"))
            .collect();
        reps.sort();
        reps.dedup();
        out = reps;
    }
    Ok(out)
}

/// Depth below which both branches of the order search are forked.
const FORK_DEPTH: usize = 6;

struct OrderSearch<'a> {
    s: &'a FiniteBiunarySemigroup,
    n: usize,
    proj: Vec<bool>,
}

impl OrderSearch<'_> {
    /// Adds `pending` and everything it forces. Returns false on a
    /// contradiction; `rel` is then garbage.
    fn close(&self, rel: &mut [bool], mut pending: Vec<(usize, usize)>, excluded: &[bool]) -> bool {
        let (n, s) = (self.n, self.s);
        while let Some((a, b)) = pending.pop() {
            if rel[a * n + b] {
                continue;
            }
            if excluded[a * n + b] || rel[b * n + a] || (self.proj[b] && !self.proj[a]) {
                return false;
            }
            rel[a * n + b] = true;
            for x in 0..n {
                if rel[x * n + a] {
                    pending.push((x, b));
                }
                if rel[b * n + x] {
                    pending.push((a, x));
                }
            }
            pending.push((s.d(a), s.d(b)));
            pending.push((s.r(a), s.r(b)));
            for c in 0..n {
                for d in 0..n {
                    if rel[c * n + d] {
                        pending.push((s.mul(a, c), s.mul(b, d)));
                        pending.push((s.mul(c, a), s.mul(d, b)));
                    }
                }
            }
        }
        true
    }

    fn run(&self, rel: Vec<bool>, excluded: Vec<bool>, depth: usize) -> Vec<Vec<bool>> {
        let n = self.n;
        let next = (0..n * n).find(|&i| {
            let (a, b) = (i / n, i % n);
            a != b && !rel[i] && !excluded[i] && !rel[b * n + a]
        });
        let Some(i) = next else {
            return vec![rel];
        };
        let include = || {
            let mut with = rel.clone();
            if self.close(&mut with, vec![(i / n, i % n)], &excluded) {
                self.run(with, excluded.clone(), depth + 1)
            } else {
                Vec::new()
            }
        };
        let exclude = || {
            let mut without = excluded.clone();
            without[i] = true;
            self.run(rel.clone(), without, depth + 1)
        };
        let (mut left, right) = if depth < FORK_DEPTH {
            par::join(include, exclude)
        } else {
            (include(), exclude())
        };
        left.extend(right);
        left
    }
}
