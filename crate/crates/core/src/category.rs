//! Finite ordered categories `(C, ∘, D, R, ≤)` with a meet on identities.
//!
//! Composition is partial and defined exactly on pairs with `R(x) = D(y)`;
//! undefined entries are `None`, never a default element. The module builds
//! the category of an ordered Ehresmann semigroup, decides the OC laws,
//! computes restriction, corestriction and the derived biaction, recovers a
//! semigroup through the pseudoproduct, and checks the correspondence
//! between the two sides on objects and on maps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::law::{first_failure, InstanceLaw, LawReport};
use crate::order::PartialOrder;
use crate::orders::{derive_orders, is_ordered_hom, OrderLaw, OrderedSemigroup};
use crate::par;
use crate::semigroup::{FiniteBiunarySemigroup, HomCandidate};

/// A small category on `0..n` given by `D`, `R` and a partial composition
/// table. Construction validates every category axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Category {
    n: usize,
    dmap: Vec<usize>,
    rmap: Vec<usize>,
    comp: Vec<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    names: Option<Vec<String>>,
}

impl Category {
    pub fn new(dmap: Vec<usize>, rmap: Vec<usize>, comp: Vec<Option<usize>>) -> Result<Self> {
        let n = dmap.len();
        if n == 0 {
            return Err(Error::structural("carrier must be non-empty"));
        }
        if rmap.len() != n || comp.len() != n * n {
            return Err(Error::structural("D, R and composition table sizes disagree"));
        }
        if dmap.iter().chain(&rmap).chain(comp.iter().flatten()).any(|&x| x >= n) {
            return Err(Error::structural("index out of range"));
        }
        let c = Category { n, dmap, rmap, comp, names: None };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.d(self.r(x)) != self.r(x) || self.r(self.d(x)) != self.d(x) {
                return Err(Error::structural(format!("D/R of {} are not identities", self.name(x))));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let composable = self.r(x) == self.d(y);
                match (self.comp(x, y), composable) {
                    (Some(_), false) => {
                        return Err(Error::structural(format!(
                            "{}∘{} is defined although R({0}) ≠ D({1})",
                            self.name(x),
                            self.name(y)
                        )))
                    }
                    (None, true) => {
                        return Err(Error::structural(format!(
                            "{}∘{} is undefined although R({0}) = D({1})",
                            self.name(x),
                            self.name(y)
                        )))
                    }
                    (Some(xy), true) => {
                        if self.d(xy) != self.d(x) || self.r(xy) != self.r(y) {
                            return Err(Error::structural(format!(
                                "{}∘{} has the wrong domain or range",
                                self.name(x),
                                self.name(y)
                            )));
                        }
                    }
                    (None, false) => {}
                }
            }
            if self.comp(self.d(x), x) != Some(x) || self.comp(x, self.r(x)) != Some(x) {
                return Err(Error::structural(format!("identities do not act as units on {}", self.name(x))));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.comp(x, y) else { continue };
                for z in 0..n {
                    if let (Some(l), Some(yz)) = (self.comp(xy, z), self.comp(y, z)) {
                        if self.comp(x, yz) != Some(l) {
                            return Err(Error::structural(format!(
                                "composition is not associative at ({}, {}, {})",
                                self.name(x),
                                self.name(y),
                                self.name(z)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The underlying category of a biunary semigroup: `s∘t = st`, defined
    /// only when `R(s) = D(t)`.
    pub fn of_semigroup(s: &FiniteBiunarySemigroup) -> Result<Self> {
        let n = s.len();
        let comp = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                (s.r(a) == s.d(b)).then(|| s.mul(a, b))
            })
            .collect();
        let c = Self::new(s.dmap().to_vec(), s.rmap().to_vec(), comp)?;
        Ok(Category { names: s.names().map(<[String]>::to_vec), ..c })
    }

    pub fn with_names(mut self, names: Option<Vec<String>>) -> Self {
        self.names = names;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn d(&self, x: usize) -> usize {
        self.dmap[x]
    }

    #[inline]
    pub fn r(&self, x: usize) -> usize {
        self.rmap[x]
    }

    #[inline]
    pub fn comp(&self, x: usize, y: usize) -> Option<usize> {
        self.comp[x * self.n + y]
    }

    pub fn dmap(&self) -> &[usize] {
        &self.dmap
    }

    pub fn rmap(&self) -> &[usize] {
        &self.rmap
    }

    pub fn comp_table(&self) -> &[Option<usize>] {
        &self.comp
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn is_identity(&self, x: usize) -> bool {
        self.dmap[x] == x
    }

    /// Identities in index order.
    pub fn identities(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.is_identity(x)).collect()
    }

    pub fn composable_pairs(&self) -> usize {
        self.comp.iter().filter(|c| c.is_some()).count()
    }

    fn same_tables(&self, other: &Self) -> bool {
        self.n == other.n && self.dmap == other.dmap && self.rmap == other.rmap && self.comp == other.comp
    }
}

/// A category with a partial order and a meet table on identities.
///
/// The meet table is stored rather than recomputed so that files can supply
/// it; `meet(e, f)` is only ever defined for identities, and whether it is
/// the greatest lower bound is the [`CategoryLaw::MeetSemilattice`] check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedCategory {
    pub cat: Category,
    pub order: PartialOrder,
    meet: Vec<Option<usize>>,
}

impl OrderedCategory {
    pub fn new(cat: Category, order: PartialOrder, meet: Vec<Option<usize>>) -> Result<Self> {
        let n = cat.len();
        if order.len() != n || meet.len() != n * n {
            return Err(Error::structural("order or meet table size disagrees with the category"));
        }
        for e in 0..n {
            for f in 0..n {
                if let Some(m) = meet[e * n + f] {
                    if !cat.is_identity(e) || !cat.is_identity(f) || m >= n || !cat.is_identity(m) {
                        return Err(Error::structural(format!(
                            "meet entry ({}, {}) is not a meet of identities",
                            cat.name(e),
                            cat.name(f)
                        )));
                    }
                }
            }
        }
        Ok(OrderedCategory { cat, order, meet })
    }

    /// Meet table filled with greatest lower bounds among identities, where
    /// they exist.
    pub fn with_derived_meet(cat: Category, order: PartialOrder) -> Result<Self> {
        let n = cat.len();
        let ids = cat.identities();
        let mut meet = vec![None; n * n];
        if order.len() == n {
            for &e in &ids {
                for &f in &ids {
                    let lower: Vec<usize> = ids.iter().copied().filter(|&g| order.leq(g, e) && order.leq(g, f)).collect();
                    meet[e * n + f] = lower.iter().copied().find(|&m| lower.iter().all(|&g| order.leq(g, m)));
                }
            }
        }
        Self::new(cat, order, meet)
    }

    pub fn len(&self) -> usize {
        self.cat.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> Option<usize> {
        self.meet[e * self.len() + f]
    }

    pub fn meet_table(&self) -> &[Option<usize>] {
        &self.meet
    }

    pub fn name(&self, x: usize) -> String {
        self.cat.name(x)
    }

    /// Whether the meet table is exactly the table of greatest lower bounds.
    pub fn meet_is_derived(&self) -> bool {
        OrderedCategory::with_derived_meet(self.cat.clone(), self.order.clone())
            .map(|c| c.meet == self.meet)
            .unwrap_or(false)
    }

    /// Same tables, order and meet; names ignored.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.cat.same_tables(&other.cat) && self.order == other.order && self.meet == other.meet
    }

    /// Maximum of `{y ≤ x : keep(y)}`, if there is one.
    fn max_below(&self, x: usize, keep: impl Fn(usize) -> bool) -> Option<usize> {
        let n = self.len();
        let below: Vec<usize> = (0..n).filter(|&y| self.leq(y, x) && keep(y)).collect();
        below.iter().copied().find(|&m| below.iter().all(|&y| self.leq(y, m)))
    }

    fn restriction_raw(&self, e: usize, x: usize) -> Option<usize> {
        if !self.cat.is_identity(e) || !self.leq(e, self.cat.d(x)) {
            return None;
        }
        self.max_below(x, |y| self.leq(self.cat.d(y), e)).filter(|&m| self.cat.d(m) == e)
    }

    fn corestriction_raw(&self, x: usize, e: usize) -> Option<usize> {
        if !self.cat.is_identity(e) || !self.leq(e, self.cat.r(x)) {
            return None;
        }
        self.max_below(x, |y| self.leq(self.cat.r(y), e)).filter(|&m| self.cat.r(m) == e)
    }

    /// `e|x = max{y ≤ x : D(y) ≤ e}` for an identity `e ≤ D(x)`.
    pub fn restriction(&self, e: usize, x: usize) -> Result<usize> {
        if !self.cat.is_identity(e) || !self.leq(e, self.cat.d(x)) {
            return Err(Error::structural(format!(
                "restriction {}|{} needs an identity below D({1})",
                self.name(e),
                self.name(x)
            )));
        }
        match self.max_below(x, |y| self.leq(self.cat.d(y), e)) {
            None => Err(Error::Oc6Violation(format!(
                "no maximum y ≤ {} with D(y) ≤ {}",
                self.name(x),
                self.name(e)
            ))),
            Some(m) if self.cat.d(m) != e => Err(Error::Oc6Violation(format!(
                "maximum {} below {} has domain {} ≠ {}",
                self.name(m),
                self.name(x),
                self.name(self.cat.d(m)),
                self.name(e)
            ))),
            Some(m) => Ok(m),
        }
    }

    /// `x|e = max{y ≤ x : R(y) ≤ e}` for an identity `e ≤ R(x)`.
    pub fn corestriction(&self, x: usize, e: usize) -> Result<usize> {
        if !self.cat.is_identity(e) || !self.leq(e, self.cat.r(x)) {
            return Err(Error::structural(format!(
                "corestriction {}|{} needs an identity below R({0})",
                self.name(x),
                self.name(e)
            )));
        }
        match self.max_below(x, |y| self.leq(self.cat.r(y), e)) {
            None => Err(Error::Oc6Violation(format!(
                "no maximum y ≤ {} with R(y) ≤ {}",
                self.name(x),
                self.name(e)
            ))),
            Some(m) if self.cat.r(m) != e => Err(Error::Oc6Violation(format!(
                "maximum {} below {} has range {} ≠ {}",
                self.name(m),
                self.name(x),
                self.name(self.cat.r(m)),
                self.name(e)
            ))),
            Some(m) => Ok(m),
        }
    }

    pub fn check_law(&self, law: CategoryLaw) -> LawReport {
        law.check(self, self.len())
    }

    /// OC1–OC3. OC1 holds by construction of [`Category`] and [`PartialOrder`].
    pub fn check_omega_structured(&self) -> LawReport {
        LawReport::all("omega-structured", [CategoryLaw::Oc2, CategoryLaw::Oc3].map(|l| self.check_law(l)))
    }

    pub fn check_oc_property(&self, prop: OcProperty) -> LawReport {
        let laws: &[CategoryLaw] = match prop {
            OcProperty::Oc4 => &[CategoryLaw::Oc4],
            OcProperty::Oc4a => &[CategoryLaw::Oc4a],
            OcProperty::Oc4b => &[CategoryLaw::Oc4b],
            OcProperty::Oc6 => &[CategoryLaw::Oc6a, CategoryLaw::Oc6b],
            OcProperty::Oc6a => &[CategoryLaw::Oc6a],
            OcProperty::Oc6b => &[CategoryLaw::Oc6b],
            OcProperty::Oc7 => &[CategoryLaw::Oc7],
            OcProperty::Oc7Prime => &[CategoryLaw::Oc7Prime],
            OcProperty::Oc8 => &[CategoryLaw::Oc8a, CategoryLaw::Oc8b],
            OcProperty::Oc8a => &[CategoryLaw::Oc8a],
            OcProperty::Oc8b => &[CategoryLaw::Oc8b],
            OcProperty::Oci => &[CategoryLaw::Oci],
            OcProperty::MeetSemilattice => &[CategoryLaw::MeetSemilattice],
            OcProperty::Epi => &[CategoryLaw::Epi],
            OcProperty::Inductive1 => {
                return LawReport::all(
                    prop.name(),
                    [
                        self.check_omega_structured(),
                        self.check_oc_property(OcProperty::Oc8),
                        self.check_oc_property(OcProperty::MeetSemilattice),
                    ],
                )
            }
        };
        LawReport::all(prop.name(), laws.iter().map(|&l| self.check_law(l)))
    }

    /// (OC8a) ⟺ (OC4A) ∧ (OC6), and (OC8) ⟺ (OC4A) ∧ (OC4B) ∧ (OC6), each
    /// side evaluated independently.
    pub fn check_prop_oc_equivalences(&self) -> LawReport {
        let holds = |p| self.check_oc_property(p).holds;
        let (oc8a, oc8, oc4a, oc4b, oc6) = (
            holds(OcProperty::Oc8a),
            holds(OcProperty::Oc8),
            holds(OcProperty::Oc4a),
            holds(OcProperty::Oc4b),
            holds(OcProperty::Oc6),
        );
        let first = oc8a == (oc4a && oc6);
        let second = oc8 == (oc4a && oc4b && oc6);
        let detail = format!("OC8a={oc8a} OC8={oc8} OC4A={oc4a} OC4B={oc4b} OC6={oc6}");
        match (first, second) {
            (true, true) => LawReport::pass("oc-equivalences").with_detail(detail),
            (false, _) => LawReport::fail("oc-equivalences", detail).with_clause("OC8a<->OC4A+OC6"),
            (true, false) => LawReport::fail("oc-equivalences", detail).with_clause("OC8<->OC4A+OC4B+OC6"),
        }
    }

    /// Ω-structured with (OC6), (OC7′), (OCI) and meet-semilattice identities.
    pub fn check_ehresmann_ordered_category(&self) -> LawReport {
        LawReport::all(
            "ehresmann-ordered-category",
            [
                self.check_omega_structured(),
                self.check_oc_property(OcProperty::Oc6),
                self.check_law(CategoryLaw::Oc7Prime),
                self.check_law(CategoryLaw::Oci),
                self.check_law(CategoryLaw::MeetSemilattice),
            ],
        )
    }

    fn require_eoc(&self) -> Result<()> {
        let r = self.check_ehresmann_ordered_category();
        if r.holds {
            Ok(())
        } else {
            Err(Error::NotEhresmannOrderedCategory(format!(
                "{}: {}",
                r.clause.unwrap_or_default(),
                r.detail
            )))
        }
    }
}

/// Named OC properties, as accepted by [`OrderedCategory::check_oc_property`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OcProperty {
    Oc4,
    Oc4a,
    Oc4b,
    Oc6,
    Oc6a,
    Oc6b,
    Oc7,
    Oc7Prime,
    Oc8,
    Oc8a,
    Oc8b,
    Oci,
    MeetSemilattice,
    /// Every element is left-cancellable: `x∘t = x∘u ⟹ t = u`.
    Epi,
    /// (OC8) plus meet-semilattice identities on an Ω-structured category.
    Inductive1,
}

impl OcProperty {
    pub const ALL: [OcProperty; 15] = [
        OcProperty::Oc4,
        OcProperty::Oc4a,
        OcProperty::Oc4b,
        OcProperty::Oc6,
        OcProperty::Oc6a,
        OcProperty::Oc6b,
        OcProperty::Oc7,
        OcProperty::Oc7Prime,
        OcProperty::Oc8,
        OcProperty::Oc8a,
        OcProperty::Oc8b,
        OcProperty::Oci,
        OcProperty::MeetSemilattice,
        OcProperty::Epi,
        OcProperty::Inductive1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OcProperty::Oc4 => "OC4",
            OcProperty::Oc4a => "OC4A",
            OcProperty::Oc4b => "OC4B",
            OcProperty::Oc6 => "OC6",
            OcProperty::Oc6a => "OC6a",
            OcProperty::Oc6b => "OC6b",
            OcProperty::Oc7 => "OC7",
            OcProperty::Oc7Prime => "OC7'",
            OcProperty::Oc8 => "OC8",
            OcProperty::Oc8a => "OC8a",
            OcProperty::Oc8b => "OC8b",
            OcProperty::Oci => "OCI",
            OcProperty::MeetSemilattice => "meet-semilattice",
            OcProperty::Epi => "epi",
            OcProperty::Inductive1 => "inductive1",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let wanted = name.replace("prime", "'");
        Self::ALL.into_iter().find(|p| p.name().eq_ignore_ascii_case(&wanted))
    }
}

/// Category-side laws, one instance at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CategoryLaw {
    /// `a ≤ b ⟹ D(a) ≤ D(b) ∧ R(a) ≤ R(b)`
    Oc2,
    /// `a ≤ b`, `c ≤ d`, `a∘c` and `b∘d` defined ⟹ `a∘c ≤ b∘d`
    Oc3,
    Oc4,
    Oc4a,
    Oc4b,
    /// instance `(e, x)`
    Oc6a,
    /// instance `(x, e)`
    Oc6b,
    /// instance `(a, b, c)`: `a ≤ b∘c ⟹ a = b'∘c'` for some `b' ≤ b`, `c' ≤ c`
    Oc7,
    Oc7Prime,
    /// instance `(e, x)`
    Oc8a,
    /// instance `(x, e)`
    Oc8b,
    /// instance `(a, e)`
    Oci,
    /// instance `(e, f, g)`: `meet(e, f)` is defined and is the greatest
    /// lower bound of `e`, `f` among identities (tested against `g`)
    MeetSemilattice,
    /// instance `(x, t, u)`
    Epi,
}

impl CategoryLaw {
    pub const ALL: [CategoryLaw; 14] = [
        CategoryLaw::Oc2,
        CategoryLaw::Oc3,
        CategoryLaw::Oc4,
        CategoryLaw::Oc4a,
        CategoryLaw::Oc4b,
        CategoryLaw::Oc6a,
        CategoryLaw::Oc6b,
        CategoryLaw::Oc7,
        CategoryLaw::Oc7Prime,
        CategoryLaw::Oc8a,
        CategoryLaw::Oc8b,
        CategoryLaw::Oci,
        CategoryLaw::MeetSemilattice,
        CategoryLaw::Epi,
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == name)
    }
}

impl InstanceLaw<OrderedCategory> for CategoryLaw {
    fn name(&self) -> &'static str {
        match self {
            CategoryLaw::Oc2 => "OC2",
            CategoryLaw::Oc3 => "OC3",
            CategoryLaw::Oc4 => "OC4",
            CategoryLaw::Oc4a => "OC4A",
            CategoryLaw::Oc4b => "OC4B",
            CategoryLaw::Oc6a => "OC6a",
            CategoryLaw::Oc6b => "OC6b",
            CategoryLaw::Oc7 => "OC7",
            CategoryLaw::Oc7Prime => "OC7'",
            CategoryLaw::Oc8a => "OC8a",
            CategoryLaw::Oc8b => "OC8b",
            CategoryLaw::Oci => "OCI",
            CategoryLaw::MeetSemilattice => "meet-semilattice",
            CategoryLaw::Epi => "epi",
        }
    }

    fn arity(&self) -> usize {
        match self {
            CategoryLaw::Oc3 => 4,
            CategoryLaw::Oc7 | CategoryLaw::Oc7Prime | CategoryLaw::MeetSemilattice | CategoryLaw::Epi => 3,
            _ => 2,
        }
    }

    fn holds_at(&self, c: &OrderedCategory, w: &[usize]) -> bool {
        let k = &c.cat;
        let n = c.len();
        let leq = |a, b| c.leq(a, b);
        match *self {
            CategoryLaw::Oc2 => !leq(w[0], w[1]) || (leq(k.d(w[0]), k.d(w[1])) && leq(k.r(w[0]), k.r(w[1]))),
            CategoryLaw::Oc3 => {
                let (a, b, cc, d) = (w[0], w[1], w[2], w[3]);
                match (leq(a, b) && leq(cc, d), k.comp(a, cc), k.comp(b, d)) {
                    (true, Some(ac), Some(bd)) => leq(ac, bd),
                    _ => true,
                }
            }
            CategoryLaw::Oc4 => {
                let (a, b) = (w[0], w[1]);
                !(leq(a, b) && k.d(a) == k.d(b) && k.r(a) == k.r(b)) || a == b
            }
            CategoryLaw::Oc4a => !(leq(w[0], w[1]) && k.d(w[0]) == k.d(w[1])) || w[0] == w[1],
            CategoryLaw::Oc4b => !(leq(w[0], w[1]) && k.r(w[0]) == k.r(w[1])) || w[0] == w[1],
            CategoryLaw::Oc6a => {
                let (e, x) = (w[0], w[1]);
                !(k.is_identity(e) && leq(e, k.d(x))) || c.restriction_raw(e, x).is_some()
            }
            CategoryLaw::Oc6b => {
                let (x, e) = (w[0], w[1]);
                !(k.is_identity(e) && leq(e, k.r(x))) || c.corestriction_raw(x, e).is_some()
            }
            CategoryLaw::Oc7 => {
                let (a, b, cc) = (w[0], w[1], w[2]);
                match k.comp(b, cc) {
                    Some(bc) if leq(a, bc) => (0..n).any(|b2| {
                        leq(b2, b) && (0..n).any(|c2| leq(c2, cc) && k.comp(b2, c2) == Some(a))
                    }),
                    _ => true,
                }
            }
            CategoryLaw::Oc7Prime => {
                let (a, b, cc) = (w[0], w[1], w[2]);
                match k.comp(b, cc) {
                    Some(bc) if leq(a, bc) => (0..n).any(|b2| {
                        leq(b2, b)
                            && k.d(b2) == k.d(a)
                            && (0..n).any(|c2| {
                                leq(c2, cc)
                                    && k.r(c2) == k.r(a)
                                    && k.comp(b2, c2).is_some_and(|bc2| leq(a, bc2))
                            })
                    }),
                    _ => true,
                }
            }
            CategoryLaw::Oc8a => {
                let (e, x) = (w[0], w[1]);
                if !(k.is_identity(e) && leq(e, k.d(x))) {
                    return true;
                }
                let mut with_domain = (0..n).filter(|&y| leq(y, x) && k.d(y) == e);
                match (with_domain.next(), with_domain.next()) {
                    (Some(y), None) => c.restriction_raw(e, x) == Some(y),
                    _ => false,
                }
            }
            CategoryLaw::Oc8b => {
                let (x, e) = (w[0], w[1]);
                if !(k.is_identity(e) && leq(e, k.r(x))) {
                    return true;
                }
                let mut with_range = (0..n).filter(|&y| leq(y, x) && k.r(y) == e);
                match (with_range.next(), with_range.next()) {
                    (Some(y), None) => c.corestriction_raw(x, e) == Some(y),
                    _ => false,
                }
            }
            CategoryLaw::Oci => {
                let (a, e) = (w[0], w[1]);
                !(k.is_identity(e) && leq(a, e)) || k.is_identity(a)
            }
            CategoryLaw::MeetSemilattice => {
                let (e, f, g) = (w[0], w[1], w[2]);
                if !(k.is_identity(e) && k.is_identity(f) && k.is_identity(g)) {
                    return true;
                }
                match c.meet(e, f) {
                    None => false,
                    Some(m) => leq(m, e) && leq(m, f) && (!(leq(g, e) && leq(g, f)) || leq(g, m)),
                }
            }
            CategoryLaw::Epi => {
                let (x, t, u) = (w[0], w[1], w[2]);
                match (k.comp(x, t), k.comp(x, u)) {
                    (Some(xt), Some(xu)) if xt == xu => t == u,
                    _ => true,
                }
            }
        }
    }

    fn describe(&self, c: &OrderedCategory, w: &[usize]) -> String {
        let names: Vec<String> = w.iter().map(|&x| c.name(x)).collect();
        let k = &c.cat;
        let extra = match *self {
            CategoryLaw::Oc6a => match c.restriction(w[0], w[1]) {
                Err(e) => format!(": {e}"),
                Ok(_) => String::new(),
            },
            CategoryLaw::Oc6b => match c.corestriction(w[0], w[1]) {
                Err(e) => format!(": {e}"),
                Ok(_) => String::new(),
            },
            CategoryLaw::Oc8a => {
                let ys: Vec<String> =
                    (0..c.len()).filter(|&y| c.leq(y, w[1]) && k.d(y) == w[0]).map(|y| c.name(y)).collect();
                format!(": elements below {} with domain {}: [{}]", names[1], names[0], ys.join(", "))
            }
            CategoryLaw::Oc8b => {
                let ys: Vec<String> =
                    (0..c.len()).filter(|&y| c.leq(y, w[0]) && k.r(y) == w[1]).map(|y| c.name(y)).collect();
                format!(": elements below {} with range {}: [{}]", names[0], names[1], ys.join(", "))
            }
            _ => String::new(),
        };
        format!("{} fails at ({}){}", self.name(), names.join(", "), extra)
    }
}

/// Left and right actions of identities on arrows, as `n × n` tables:
/// `left[e·n + x] = e·x` and `right[x·n + e] = x·e` for identities `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biaction {
    n: usize,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Biaction {
    pub fn from_tables(n: usize, left: Vec<Option<usize>>, right: Vec<Option<usize>>) -> Result<Self> {
        if left.len() != n * n || right.len() != n * n {
            return Err(Error::structural("biaction tables have the wrong size"));
        }
        Ok(Biaction { n, left, right })
    }

    #[inline]
    pub fn left(&self, e: usize, x: usize) -> Option<usize> {
        self.left[e * self.n + x]
    }

    #[inline]
    pub fn right(&self, x: usize, e: usize) -> Option<usize> {
        self.right[x * self.n + e]
    }

    pub fn set_left(&mut self, e: usize, x: usize, value: Option<usize>) {
        self.left[e * self.n + x] = value;
    }

    pub fn left_table(&self) -> &[Option<usize>] {
        &self.left
    }

    pub fn right_table(&self) -> &[Option<usize>] {
        &self.right
    }
}

/// `e·x = (e ∧ D(x))|x` and `x·e = x|(R(x) ∧ e)`.
pub fn derive_biaction(c: &OrderedCategory) -> Result<Biaction> {
    c.require_eoc()?;
    let n = c.len();
    let k = &c.cat;
    let mut left = vec![None; n * n];
    let mut right = vec![None; n * n];
    for e in k.identities() {
        for x in 0..n {
            let ed = c.meet(e, k.d(x)).ok_or_else(|| Error::structural("meet undefined"))?;
            left[e * n + x] = Some(c.restriction(ed, x)?);
            let re = c.meet(k.r(x), e).ok_or_else(|| Error::structural("meet undefined"))?;
            right[x * n + e] = Some(c.corestriction(x, re)?);
        }
    }
    Ok(Biaction { n, left, right })
}

/// Axioms (E1)–(E6) split into single-instance clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiactionAxiom {
    /// `∧` is a commutative idempotent semigroup on identities; `(e, f, g)`
    E1,
    /// `(e ∧ f)·a = e·(f·a)`; `(e, f, a)`
    E2LeftAction,
    /// `D(a)·a = a`; `(a)`
    E2LeftUnit,
    /// `D(e·a) = e ∧ D(a)`; `(e, a)`
    E2LeftDomain,
    /// `a·(e ∧ f) = (a·e)·f`; `(a, e, f)`
    E2RightAction,
    /// `a·R(a) = a`; `(a)`
    E2RightUnit,
    /// `R(a·e) = R(a) ∧ e`; `(a, e)`
    E2RightRange,
    /// `(e·a)·f = e·(a·f)`; `(e, a, f)`
    E3,
    /// `e·a = e ∧ a` and `a·e = a ∧ e` for identities; `(e, a)`
    E4,
    /// `R(e·a) ≤ R(a)` and `D(a·e) ≤ D(a)`; `(e, a)`
    E5,
    /// `e·(a∘b) = (e·a)∘(R(e·a)·b)`; `(e, a, b)`
    E6Left,
    /// `(a∘b)·e = (a·D(b·e))∘(b·e)`; `(a, b, e)`
    E6Right,
}

impl BiactionAxiom {
    pub const ALL: [BiactionAxiom; 12] = [
        BiactionAxiom::E1,
        BiactionAxiom::E2LeftAction,
        BiactionAxiom::E2LeftUnit,
        BiactionAxiom::E2LeftDomain,
        BiactionAxiom::E2RightAction,
        BiactionAxiom::E2RightUnit,
        BiactionAxiom::E2RightRange,
        BiactionAxiom::E3,
        BiactionAxiom::E4,
        BiactionAxiom::E5,
        BiactionAxiom::E6Left,
        BiactionAxiom::E6Right,
    ];
}

/// A category together with a candidate biaction, the subject of (E1)–(E6).
pub struct WithBiaction<'a> {
    pub cat: &'a OrderedCategory,
    pub biaction: &'a Biaction,
}

impl InstanceLaw<WithBiaction<'_>> for BiactionAxiom {
    fn name(&self) -> &'static str {
        match self {
            BiactionAxiom::E1 => "E1",
            BiactionAxiom::E2LeftAction => "E2-left-action",
            BiactionAxiom::E2LeftUnit => "E2-left-unit",
            BiactionAxiom::E2LeftDomain => "E2-left-domain",
            BiactionAxiom::E2RightAction => "E2-right-action",
            BiactionAxiom::E2RightUnit => "E2-right-unit",
            BiactionAxiom::E2RightRange => "E2-right-range",
            BiactionAxiom::E3 => "E3",
            BiactionAxiom::E4 => "E4",
            BiactionAxiom::E5 => "E5",
            BiactionAxiom::E6Left => "E6-left",
            BiactionAxiom::E6Right => "E6-right",
        }
    }

    fn arity(&self) -> usize {
        match self {
            BiactionAxiom::E2LeftUnit | BiactionAxiom::E2RightUnit => 1,
            BiactionAxiom::E2LeftDomain | BiactionAxiom::E2RightRange | BiactionAxiom::E4 | BiactionAxiom::E5 => 2,
            _ => 3,
        }
    }

    fn holds_at(&self, ctx: &WithBiaction<'_>, w: &[usize]) -> bool {
        let c = ctx.cat;
        let b = ctx.biaction;
        let k = &c.cat;
        let id = |x: usize| k.is_identity(x);
        let meet = |e: usize, f: usize| c.meet(e, f);
        // order on identities induced by the meet
        let below = |e: usize, f: usize| meet(e, f) == Some(e);
        let left = |e: usize, x: usize| b.left(e, x);
        let right = |x: usize, e: usize| b.right(x, e);
        match *self {
            BiactionAxiom::E1 => {
                let (e, f, g) = (w[0], w[1], w[2]);
                if !(id(e) && id(f) && id(g)) {
                    return true;
                }
                let ef = meet(e, f);
                let fg = meet(f, g);
                ef.is_some_and(id)
                    && ef == meet(f, e)
                    && meet(e, e) == Some(e)
                    && ef.and_then(|ef| meet(ef, g)).is_some()
                    && ef.and_then(|ef| meet(ef, g)) == fg.and_then(|fg| meet(e, fg))
            }
            BiactionAxiom::E2LeftAction => {
                let (e, f, a) = (w[0], w[1], w[2]);
                if !(id(e) && id(f)) {
                    return true;
                }
                let lhs = meet(e, f).and_then(|ef| left(ef, a));
                lhs.is_some() && lhs == left(f, a).and_then(|fa| left(e, fa))
            }
            BiactionAxiom::E2LeftUnit => left(k.d(w[0]), w[0]) == Some(w[0]),
            BiactionAxiom::E2LeftDomain => {
                let (e, a) = (w[0], w[1]);
                !id(e) || left(e, a).is_some_and(|ea| Some(k.d(ea)) == meet(e, k.d(a)))
            }
            BiactionAxiom::E2RightAction => {
                let (a, e, f) = (w[0], w[1], w[2]);
                if !(id(e) && id(f)) {
                    return true;
                }
                let lhs = meet(e, f).and_then(|ef| right(a, ef));
                lhs.is_some() && lhs == right(a, e).and_then(|ae| right(ae, f))
            }
            BiactionAxiom::E2RightUnit => right(w[0], k.r(w[0])) == Some(w[0]),
            BiactionAxiom::E2RightRange => {
                let (a, e) = (w[0], w[1]);
                !id(e) || right(a, e).is_some_and(|ae| Some(k.r(ae)) == meet(k.r(a), e))
            }
            BiactionAxiom::E3 => {
                let (e, a, f) = (w[0], w[1], w[2]);
                if !(id(e) && id(f)) {
                    return true;
                }
                let lhs = left(e, a).and_then(|ea| right(ea, f));
                lhs.is_some() && lhs == right(a, f).and_then(|af| left(e, af))
            }
            BiactionAxiom::E4 => {
                let (e, a) = (w[0], w[1]);
                if !(id(e) && id(a)) {
                    return true;
                }
                left(e, a).is_some() && left(e, a) == meet(e, a) && right(a, e).is_some() && right(a, e) == meet(a, e)
            }
            BiactionAxiom::E5 => {
                let (e, a) = (w[0], w[1]);
                if !id(e) {
                    return true;
                }
                match (left(e, a), right(a, e)) {
                    (Some(ea), Some(ae)) => below(k.r(ea), k.r(a)) && below(k.d(ae), k.d(a)),
                    _ => false,
                }
            }
            BiactionAxiom::E6Left => {
                let (e, a, bb) = (w[0], w[1], w[2]);
                let Some(ab) = k.comp(a, bb) else { return true };
                if !id(e) {
                    return true;
                }
                let lhs = left(e, ab);
                let rhs = left(e, a).and_then(|ea| left(k.r(ea), bb).and_then(|rb| k.comp(ea, rb)));
                lhs.is_some() && lhs == rhs
            }
            BiactionAxiom::E6Right => {
                let (a, bb, e) = (w[0], w[1], w[2]);
                let Some(ab) = k.comp(a, bb) else { return true };
                if !id(e) {
                    return true;
                }
                let lhs = right(ab, e);
                let rhs = right(bb, e).and_then(|be| right(a, k.d(be)).and_then(|ad| k.comp(ad, be)));
                lhs.is_some() && lhs == rhs
            }
        }
    }

    fn describe(&self, ctx: &WithBiaction<'_>, w: &[usize]) -> String {
        let names: Vec<String> = w.iter().map(|&x| ctx.cat.name(x)).collect();
        format!("{} fails at ({})", self.name(), names.join(", "))
    }
}

/// Checks (E1)–(E6) over every applicable tuple.
pub fn verify_biaction(c: &OrderedCategory, b: &Biaction) -> LawReport {
    if b.n != c.len() {
        return LawReport::fail("biaction", "biaction tables do not match the category");
    }
    let ctx = WithBiaction { cat: c, biaction: b };
    LawReport::all("biaction", BiactionAxiom::ALL.iter().map(|ax| ax.check(&ctx, c.len())))
}

/// The category of an ordered Ehresmann semigroup: partial product, the same
/// order, and `e ∧ f = ef` on projections.
pub fn category_of(os: &OrderedSemigroup) -> Result<OrderedCategory> {
    let r = os.check_ehresmann_order();
    if !r.holds {
        return Err(Error::NotOrderedEhresmann(format!("{}: {}", r.clause.unwrap_or_default(), r.detail)));
    }
    let s = &os.base;
    let cat = Category::of_semigroup(s)?;
    let n = s.len();
    let mut meet = vec![None; n * n];
    for e in cat.identities() {
        for f in cat.identities() {
            meet[e * n + f] = Some(s.mul(e, f));
        }
    }
    OrderedCategory::new(cat, os.order.clone(), meet)
}

/// The pseudoproduct semigroup `s ⊗ t = s|(R(s) ∧ D(t)) ∘ (R(s) ∧ D(t))|t`
/// carrying over `D`, `R` and the order.
pub fn semigroup_of(c: &OrderedCategory) -> Result<OrderedSemigroup> {
    c.require_eoc()?;
    let n = c.len();
    let k = &c.cat;
    let mut mul = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let e = c
                .meet(k.r(s), k.d(t))
                .ok_or_else(|| Error::structural("meet of identities undefined"))?;
            let left = c.corestriction(s, e)?;
            let right = c.restriction(e, t)?;
            let st = k.comp(left, right).ok_or_else(|| {
                Error::Oc6Violation(format!("pseudoproduct {}⊗{} is not composable", c.name(s), c.name(t)))
            })?;
            mul.push(st);
        }
    }
    let mut base = FiniteBiunarySemigroup::from_flat(n, mul, k.dmap().to_vec(), k.rmap().to_vec())?;
    if let Some(names) = k.names() {
        base = base.with_names(names.to_vec())?;
    }
    OrderedSemigroup::new(base, c.order.clone())
}

/// Both round trips: `semigroup_of(category_of(os)) = os` and
/// `category_of(semigroup_of(c)) = c` for `c = category_of(os)`.
pub fn esn_round_trip(os: &OrderedSemigroup) -> Result<LawReport> {
    let c = category_of(os)?;
    let back = semigroup_of(&c)?;
    if !back.base.same_tables(&os.base) || back.order != os.order {
        let n = os.len();
        let detail = match first_failure(n, 2, |w| back.base.mul(w[0], w[1]) == os.base.mul(w[0], w[1])) {
            Some(w) => format!(
                "{}⊗{} = {} but {0}·{1} = {}",
                os.base.name(w[0]),
                os.base.name(w[1]),
                os.base.name(back.base.mul(w[0], w[1])),
                os.base.name(os.base.mul(w[0], w[1]))
            ),
            None => "D, R or order changed".to_string(),
        };
        return Ok(LawReport::fail("esn-round-trip", detail).with_clause("semigroup-direction"));
    }
    let again = category_of(&back)?;
    if !again.same_structure(&c) {
        return Ok(LawReport::fail("esn-round-trip", "category rebuilt from the pseudoproduct differs")
            .with_clause("category-direction"));
    }
    Ok(LawReport::pass("esn-round-trip"))
}

/// A candidate functor between two categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorCandidate {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
}

impl FunctorCandidate {
    pub fn new(map: Vec<usize>) -> Self {
        FunctorCandidate { source: String::from("C1"), target: String::from("C2"), map }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect())
    }
}

/// Itemised verdict for a morphism of Ehresmann-ordered categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismReport {
    pub functor: LawReport,
    /// Order preservation, meet preservation, restriction/corestriction
    /// preservation.
    pub bullets: [LawReport; 3],
}

impl MorphismReport {
    pub fn holds(&self) -> bool {
        self.functor.holds && self.bullets.iter().all(|b| b.holds)
    }

    pub fn bullet_verdicts(&self) -> [bool; 3] {
        [self.bullets[0].holds, self.bullets[1].holds, self.bullets[2].holds]
    }

    pub fn to_report(&self) -> LawReport {
        LawReport::all("eoc-morphism", std::iter::once(self.functor.clone()).chain(self.bullets.iter().cloned()))
    }
}

/// Functor check plus the three morphism conditions, each reported
/// separately.
pub fn is_eoc_morphism(f: &FunctorCandidate, c1: &OrderedCategory, c2: &OrderedCategory) -> MorphismReport {
    let (n1, n2) = (c1.len(), c2.len());
    if f.map.len() != n1 || f.map.iter().any(|&y| y >= n2) {
        let bad = LawReport::fail("functor", "map is not total on the source").with_clause("total");
        let skip = |name: &str| LawReport::fail(name, "map is not total");
        return MorphismReport {
            functor: bad,
            bullets: [skip("order"), skip("meet"), skip("restriction")],
        };
    }
    let m = &f.map;
    let (k1, k2) = (&c1.cat, &c2.cat);

    let functor = (|| {
        if let Some(x) = (0..n1).find(|&x| m[k1.d(x)] != k2.d(m[x]) || m[k1.r(x)] != k2.r(m[x])) {
            return LawReport::fail("functor", format!("D/R not preserved at {}", c1.name(x)))
                .with_clause("D/R")
                .with_witness(vec![x]);
        }
        let bad = first_failure(n1, 2, |w| match k1.comp(w[0], w[1]) {
            None => true,
            Some(xy) => k2.comp(m[w[0]], m[w[1]]) == Some(m[xy]),
        });
        match bad {
            Some(w) => LawReport::fail(
                "functor",
                format!("composite {}∘{} not preserved", c1.name(w[0]), c1.name(w[1])),
            )
            .with_clause("composition")
            .with_witness(w),
            None => LawReport::pass("functor"),
        }
    })();

    let order = match first_failure(n1, 2, |w| !c1.leq(w[0], w[1]) || c2.leq(m[w[0]], m[w[1]])) {
        None => LawReport::pass("order"),
        Some(w) => LawReport::fail(
            "order",
            format!("{} ≤ {} but images are not related", c1.name(w[0]), c1.name(w[1])),
        )
        .with_witness(w),
    };

    let meet = match first_failure(n1, 2, |w| {
        let (e, g) = (w[0], w[1]);
        if !(k1.is_identity(e) && k1.is_identity(g)) {
            return true;
        }
        match c1.meet(e, g) {
            None => false,
            Some(eg) => Some(m[eg]) == c2.meet(m[e], m[g]),
        }
    }) {
        None => LawReport::pass("meet"),
        Some(w) => LawReport::fail(
            "meet",
            format!("({} ∧ {})F ≠ {0}F ∧ {1}F", c1.name(w[0]), c1.name(w[1])),
        )
        .with_witness(w),
    };

    let restriction = (|| {
        let left = first_failure(n1, 2, |w| {
            let (e, x) = (w[0], w[1]);
            if !(k1.is_identity(e) && c1.leq(e, k1.d(x))) {
                return true;
            }
            match (c1.restriction_raw(e, x), c2.restriction_raw(m[e], m[x])) {
                (Some(ex), Some(img)) => m[ex] == img,
                _ => false,
            }
        });
        if let Some(w) = left {
            let lhs = c1.restriction_raw(w[0], w[1]).map(|ex| c2.name(m[ex]));
            let rhs = c2.restriction_raw(m[w[0]], m[w[1]]).map(|y| c2.name(y));
            return LawReport::fail(
                "restriction",
                format!(
                    "({}|{})F = {} but ({0}F)|({1}F) = {}",
                    c1.name(w[0]),
                    c1.name(w[1]),
                    lhs.unwrap_or_else(|| "undefined".into()),
                    rhs.unwrap_or_else(|| "undefined".into())
                ),
            )
            .with_clause("restriction")
            .with_witness(w);
        }
        let right = first_failure(n1, 2, |w| {
            let (x, e) = (w[0], w[1]);
            if !(k1.is_identity(e) && c1.leq(e, k1.r(x))) {
                return true;
            }
            match (c1.corestriction_raw(x, e), c2.corestriction_raw(m[x], m[e])) {
                (Some(xe), Some(img)) => m[xe] == img,
                _ => false,
            }
        });
        match right {
            Some(w) => LawReport::fail(
                "restriction",
                format!("({}|{})F ≠ ({0}F)|({1}F)", c1.name(w[0]), c1.name(w[1])),
            )
            .with_clause("corestriction")
            .with_witness(w),
            None => LawReport::pass("restriction"),
        }
    })();

    MorphismReport { functor, bullets: [order, meet, restriction] }
}

/// Default bound on `|T|^|S|` for [`morphism_correspondence`].
pub const DEFAULT_MAP_CEILING: u64 = 10_000_000;

const MAP_CHUNK: u64 = 4096;

/// Outcome of an exhaustive comparison of the two notions of morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismCorrespondence {
    pub maps: u64,
    pub morphisms: u64,
    pub report: LawReport,
}

fn decode_map(mut index: u64, src: usize, tgt: usize) -> Vec<usize> {
    // first coordinate most significant, so maps come in lexicographic order
    let mut map = vec![0; src];
    for slot in map.iter_mut().rev() {
        *slot = (index % tgt as u64) as usize;
        index /= tgt as u64;
    }
    map
}

/// Over every total map `S → T`: ordered-homomorphism ⟺ morphism of the
/// associated categories, and every morphism commutes with the derived
/// biactions.
pub fn morphism_correspondence(
    s: &OrderedSemigroup,
    t: &OrderedSemigroup,
    ceiling: u64,
) -> Result<MorphismCorrespondence> {
    let (ns, nt) = (s.len(), t.len());
    let maps = u32::try_from(ns)
        .ok()
        .and_then(|e| (nt as u64).checked_pow(e))
        .filter(|&m| m <= ceiling)
        .ok_or_else(|| Error::TooLarge(format!("{nt}^{ns} maps exceed the ceiling of {ceiling}")))?;
    let c1 = category_of(s)?;
    let c2 = category_of(t)?;
    let b1 = derive_biaction(&c1)?;
    let b2 = derive_biaction(&c2)?;
    let ids1 = c1.cat.identities();

    #[derive(Default)]
    struct Chunk {
        morphisms: u64,
        disagreement: Option<(u64, bool, bool)>,
        biaction: Option<u64>,
    }

    let chunks = maps.div_ceil(MAP_CHUNK) as usize;
    let results = par::map_range(chunks, |ci| {
        let mut out = Chunk::default();
        let lo = ci as u64 * MAP_CHUNK;
        let hi = (lo + MAP_CHUNK).min(maps);
        for idx in lo..hi {
            let map = decode_map(idx, ns, nt);
            let hom = is_ordered_hom(&HomCandidate::new(map.clone()), s, t).holds;
            let eoc = is_eoc_morphism(&FunctorCandidate::new(map.clone()), &c1, &c2).holds();
            if hom != eoc {
                out.disagreement.get_or_insert((idx, hom, eoc));
            }
            if eoc {
                out.morphisms += 1;
                let preserved = ids1.iter().all(|&e| {
                    (0..ns).all(|x| {
                        b1.left(e, x).map(|ex| map[ex]) == b2.left(map[e], map[x])
                            && b1.right(x, e).map(|xe| map[xe]) == b2.right(map[x], map[e])
                    })
                });
                if !preserved {
                    out.biaction.get_or_insert(idx);
                }
            }
        }
        out
    });

    let morphisms = results.iter().map(|c| c.morphisms).sum();
    let disagreement = results.iter().find_map(|c| c.disagreement);
    let biaction = results.iter().find_map(|c| c.biaction);
    let summary = format!("{maps} maps, {morphisms} morphisms");
    let report = match (disagreement, biaction) {
        (Some((idx, hom, eoc)), _) => {
            let map = decode_map(idx, ns, nt);
            LawReport::fail(
                "morphism-correspondence",
                format!("{summary}; map {map:?}: ordered-hom={hom}, category-morphism={eoc}"),
            )
            .with_clause("agreement")
            .with_witness(map)
        }
        (None, Some(idx)) => {
            let map = decode_map(idx, ns, nt);
            LawReport::fail("morphism-correspondence", format!("{summary}; map {map:?} does not commute with the biaction"))
                .with_clause("biaction")
                .with_witness(map)
        }
        (None, None) => LawReport::pass("morphism-correspondence").with_detail(summary),
    };
    Ok(MorphismCorrespondence { maps, morphisms, report })
}

/// One semigroup-side property paired with its category-side counterpart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biconditional {
    pub name: String,
    pub semigroup_side: bool,
    pub category_side: bool,
}

impl Biconditional {
    pub fn holds(&self) -> bool {
        self.semigroup_side == self.category_side
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCorrespondences {
    pub items: Vec<Biconditional>,
}

impl SpecialCorrespondences {
    pub fn holds(&self) -> bool {
        self.items.iter().all(Biconditional::holds)
    }

    pub fn get(&self, name: &str) -> Option<&Biconditional> {
        self.items.iter().find(|b| b.name == name)
    }

    pub fn to_report(&self) -> LawReport {
        let detail = self
            .items
            .iter()
            .map(|b| format!("{}: {}/{}", b.name, b.semigroup_side, b.category_side))
            .collect::<Vec<_>>()
            .join("; ");
        match self.items.iter().find(|b| !b.holds()) {
            None => LawReport::pass("special-correspondences").with_detail(detail),
            Some(b) => LawReport::fail("special-correspondences", detail).with_clause(b.name.clone()),
        }
    }
}

/// Semigroup/category pairs of properties that must agree under the
/// correspondence.
pub fn check_special_correspondences(os: &OrderedSemigroup) -> Result<SpecialCorrespondences> {
    let c = category_of(os)?;
    let s = &os.base;
    let os_holds = |l: OrderLaw| os.check_os_property(l).holds;
    let oc_holds = |p: OcProperty| c.check_oc_property(p).holds;
    let is_leq_e = derive_orders(s)?.leq_e == os.order;
    let lrr = s.check_left_restriction_with_range().holds;
    let rrd = s.check_right_restriction_with_domain().holds;
    let functional = s.check_functional().holds;
    let pairs = [
        ("OS4<->OC4", os_holds(OrderLaw::Os4), oc_holds(OcProperty::Oc4)),
        ("OS7<->OC7", os_holds(OrderLaw::Os7), oc_holds(OcProperty::Oc7)),
        ("OS4A<->OC4A", os_holds(OrderLaw::Os4a), oc_holds(OcProperty::Oc4a)),
        ("OS4B<->OC4B", os_holds(OrderLaw::Os4b), oc_holds(OcProperty::Oc4b)),
        ("left-restriction<->OC4A", lrr && is_leq_e, oc_holds(OcProperty::Oc4a)),
        ("right-restriction<->OC4B", rrd && is_leq_e, oc_holds(OcProperty::Oc4b)),
        ("restriction<->inductive1", lrr && rrd && is_leq_e, oc_holds(OcProperty::Inductive1)),
        (
            "functional<->OC4A+epi",
            functional && lrr && is_leq_e,
            oc_holds(OcProperty::Oc4a) && oc_holds(OcProperty::Epi),
        ),
    ];
    Ok(SpecialCorrespondences {
        items: pairs
            .into_iter()
            .map(|(name, semigroup_side, category_side)| Biconditional {
                name: name.to_string(),
                semigroup_side,
                category_side,
            })
            .collect(),
    })
}

/// The seven conditions on `(C, ∘, D, R, ≤ₗ, ≤ᵣ)` for a two-order Ehresmann
/// category. Restrictions are taken in `≤ₗ`, corestrictions in `≤ᵣ`, meets
/// are greatest lower bounds of identities.
pub fn check_ehresmann_category_two_orders(
    cat: &Category,
    leq_l: &PartialOrder,
    leq_r: &PartialOrder,
) -> Result<LawReport> {
    let n = cat.len();
    let cl = OrderedCategory::with_derived_meet(cat.clone(), leq_l.clone())?;
    let cr = OrderedCategory::with_derived_meet(cat.clone(), leq_r.clone())?;
    let b1 = LawReport::all(
        "bullet1",
        [cl.check_omega_structured(), cl.check_law(CategoryLaw::Oc8a)],
    );
    let b2 = LawReport::all(
        "bullet2",
        [cr.check_omega_structured(), cr.check_law(CategoryLaw::Oc8b)],
    );
    let b3 = match first_failure(n, 2, |w| {
        !(cat.is_identity(w[0]) && cat.is_identity(w[1])) || leq_l.leq(w[0], w[1]) == leq_r.leq(w[0], w[1])
    }) {
        None => LawReport::pass("bullet3"),
        Some(w) => LawReport::fail("bullet3", "≤ₗ and ≤ᵣ disagree on identities").with_witness(w),
    };
    let b4 = cl.check_law(CategoryLaw::MeetSemilattice).renamed("bullet4");
    let lr = leq_l.compose(leq_r);
    let rl = leq_r.compose(leq_l);
    let b5 = match (0..n * n).find(|&i| lr[i] != rl[i]) {
        None => LawReport::pass("bullet5"),
        Some(i) => LawReport::fail("bullet5", "≤ₗ∘≤ᵣ ≠ ≤ᵣ∘≤ₗ").with_witness(vec![i / n, i % n]),
    };
    let b6 = match first_failure(n, 3, |w| {
        let (x, y, e) = (w[0], w[1], w[2]);
        if !(leq_r.leq(x, y) && cat.is_identity(e)) {
            return true;
        }
        let rx = cl.meet(cat.d(x), e).and_then(|m| cl.restriction_raw(m, x));
        let ry = cl.meet(cat.d(y), e).and_then(|m| cl.restriction_raw(m, y));
        matches!((rx, ry), (Some(a), Some(b)) if leq_r.leq(a, b))
    }) {
        None => LawReport::pass("bullet6"),
        Some(w) => LawReport::fail("bullet6", "restrictions are not ≤ᵣ-monotone").with_witness(w),
    };
    let b7 = match first_failure(n, 3, |w| {
        let (x, y, e) = (w[0], w[1], w[2]);
        if !(leq_l.leq(x, y) && cat.is_identity(e)) {
            return true;
        }
        let cx = cr.meet(cat.r(x), e).and_then(|m| cr.corestriction_raw(x, m));
        let cy = cr.meet(cat.r(y), e).and_then(|m| cr.corestriction_raw(y, m));
        matches!((cx, cy), (Some(a), Some(b)) if leq_l.leq(a, b))
    }) {
        None => LawReport::pass("bullet7"),
        Some(w) => LawReport::fail("bullet7", "corestrictions are not ≤ₗ-monotone").with_witness(w),
    };
    let bullets = [b1, b2, b3, b4, b5, b6, b7];
    Ok(match bullets.into_iter().find(|b| !b.holds) {
        None => LawReport::pass("ehresmann-category"),
        Some(mut b) => {
            let clause = match b.clause.take() {
                Some(inner) => format!("{}/{inner}", b.law),
                None => b.law.clone(),
            };
            b.law = "ehresmann-category".into();
            b.with_clause(clause)
        }
    })
}
