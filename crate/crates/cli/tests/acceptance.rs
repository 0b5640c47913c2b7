//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Semigroup-side verdicts are recomputed here from the raw tables by a
//! brute-force oracle and compared with the library and the `ehr` binary.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ehresmann::category::*;
use ehresmann::orders::*;
use ehresmann::zoo::*;
use ehresmann::*;
use ehresmann_cli::run;

type Check = Result<String, String>;

type Sweep = [(FiniteBiunarySemigroup, Vec<PartialOrder>)];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Brute-force semigroup oracle over the raw tables.
struct Raw {
    n: usize,
    mul: Vec<usize>,
    d: Vec<usize>,
    r: Vec<usize>,
}

/// A relation on `0..n` as an `n * n` boolean matrix.
type Rel = Vec<bool>;

impl Raw {
    fn of(s: &FiniteBiunarySemigroup) -> Self {
        Raw { n: s.len(), mul: s.table().to_vec(), d: s.dmap().to_vec(), r: s.rmap().to_vec() }
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    fn m3(&self, a: usize, b: usize, c: usize) -> usize {
        self.m(self.m(a, b), c)
    }

    fn elems(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn projections(&self) -> Vec<usize> {
        let mut p = self.d.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    fn all(&self, k: usize, f: impl Fn(&[usize]) -> bool) -> bool {
        let total = self.n.pow(k as u32);
        (0..total).all(|mut i| {
            let mut v = vec![0; k];
            for slot in v.iter_mut() {
                *slot = i % self.n;
                i /= self.n;
            }
            f(&v)
        })
    }

    fn associative(&self) -> bool {
        self.all(3, |v| self.m(self.m(v[0], v[1]), v[2]) == self.m(v[0], self.m(v[1], v[2])))
    }

    // L1 to L4 for D and R
    fn localisable(&self) -> bool {
        self.all(2, |v| {
            let (s, t) = (v[0], v[1]);
            let (d, r) = (&self.d, &self.r);
            self.m(d[s], s) == s
                && self.m(s, r[s]) == s
                && d[d[s]] == d[s]
                && r[r[s]] == r[s]
                && r[d[s]] == d[s]
                && d[r[s]] == r[s]
                && d[self.m(s, t)] == d[self.m(s, d[t])]
                && r[self.m(s, t)] == r[self.m(r[s], t)]
        })
    }

    fn ehresmann(&self) -> bool {
        let p = self.projections();
        self.localisable() && p.iter().all(|&e| p.iter().all(|&f| self.m(e, f) == self.m(f, e)))
    }

    fn left_restriction_with_range(&self) -> bool {
        self.all(2, |v| self.m(v[0], self.d[v[1]]) == self.m(self.d[self.m(v[0], v[1])], v[0]))
    }

    fn right_restriction_with_domain(&self) -> bool {
        self.all(2, |v| self.m(self.r[v[1]], v[0]) == self.m(v[0], self.r[self.m(v[1], v[0])]))
    }

    fn de_barros_equation(&self) -> bool {
        let p = self.projections();
        self.all(2, |v| {
            p.iter().all(|&e| {
                let set = self.m3(v[0], e, v[1]);
                set == self.m(self.m3(self.d[set], v[0], v[1]), self.r[set])
            })
        })
    }

    fn leq_e(&self) -> Rel {
        let mut rel = vec![false; self.n * self.n];
        for a in self.elems() {
            for b in self.elems() {
                rel[a * self.n + b] = a == self.m3(self.d[a], b, self.r[a]);
            }
        }
        rel
    }

    fn partial_orders(&self) -> Vec<Rel> {
        let n = self.n;
        let off: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        (0u32..1 << off.len())
            .filter_map(|mask| {
                let mut rel = vec![false; n * n];
                for a in 0..n {
                    rel[a * n + a] = true;
                }
                for (i, &(a, b)) in off.iter().enumerate() {
                    rel[a * n + b] = mask >> i & 1 == 1;
                }
                let anti = off.iter().all(|&(a, b)| !(rel[a * n + b] && rel[b * n + a]));
                let trans = self.all(3, |v| !(rel[v[0] * n + v[1]] && rel[v[1] * n + v[2]]) || rel[v[0] * n + v[2]]);
                (anti && trans).then_some(rel)
            })
            .collect()
    }

    fn os2(&self, le: &Rel) -> bool {
        let n = self.n;
        self.all(2, |v| !le[v[0] * n + v[1]] || (le[self.d[v[0]] * n + self.d[v[1]]] && le[self.r[v[0]] * n + self.r[v[1]]]))
    }

    fn os3(&self, le: &Rel) -> bool {
        let n = self.n;
        self.all(4, |v| !(le[v[0] * n + v[1]] && le[v[2] * n + v[3]]) || le[self.m(v[0], v[2]) * n + self.m(v[1], v[3])])
    }

    fn os6(&self, le: &Rel) -> bool {
        let n = self.n;
        self.elems().all(|a| self.projections().iter().all(|&e| le[self.m(a, e) * n + a] && le[self.m(e, a) * n + a]))
    }

    fn osi(&self, le: &Rel) -> bool {
        let p = self.projections();
        let n = self.n;
        self.all(2, |v| !(le[v[0] * n + v[1]] && p.contains(&v[1])) || p.contains(&v[0]))
    }

    fn ehresmann_order(&self, le: &Rel) -> bool {
        self.os2(le) && self.os3(le) && self.os6(le) && self.osi(le)
    }

    fn os4_like(&self, le: &Rel, need_d: bool, need_r: bool) -> bool {
        let n = self.n;
        self.all(2, |v| {
            let (s, t) = (v[0], v[1]);
            let premise =
                le[s * n + t] && (!need_d || self.d[s] == self.d[t]) && (!need_r || self.r[s] == self.r[t]);
            !premise || s == t
        })
    }

    fn os7(&self, le: &Rel) -> bool {
        let n = self.n;
        self.all(3, |v| {
            let (u, s, t) = (v[0], v[1], v[2]);
            !le[u * n + self.m(s, t)]
                || (0..n).any(|a| (0..n).any(|b| le[a * n + s] && le[b * n + t] && self.m(a, b) == u))
        })
    }
}

fn rel_of(o: &PartialOrder) -> Rel {
    let n = o.len();
    (0..n * n).map(|i| o.leq(i / n, i % n)).collect()
}

fn sweep_structures_up_to_three() -> Vec<FiniteBiunarySemigroup> {
    (1..=3).flat_map(|n| enumerate_ehresmann_semigroups(n, false, false).unwrap()).collect()
}

/// Every labelled Ehresmann semigroup of size at most 3 with its oracle orders,
/// after checking that the library enumerates exactly those orders.
fn ordered_sweep() -> Result<Vec<(FiniteBiunarySemigroup, Vec<PartialOrder>)>, String> {
    let mut out = Vec::new();
    for s in sweep_structures_up_to_three() {
        let raw = Raw::of(&s);
        ensure!(raw.associative() && raw.ehresmann(), "enumerated a non-Ehresmann table {:?}", s.table());
        let mut oracle: Vec<Rel> = raw.partial_orders().into_iter().filter(|o| raw.ehresmann_order(o)).collect();
        let orders = enumerate_ehresmann_orders(&s, false).map_err(|e| e.to_string())?;
        let mut lib: Vec<Rel> = orders.iter().map(rel_of).collect();
        oracle.sort();
        lib.sort();
        ensure!(oracle == lib, "order enumeration disagrees with the oracle on {:?}", s.table());
        out.push((s, orders));
    }
    Ok(out)
}

fn ehr(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_ehr")).args(args).output().expect("ehr runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let v = f();
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(v)
}

fn c1_example_fidelity() -> Check {
    for (name, want) in [("two-element-monoid", "2"), ("orderless-band", "0")] {
        for iso in [false, true] {
            let uri = format!("example://{name}");
            let mut args = vec!["orders", uri.as_str(), "--count-only"];
            if iso {
                args.push("--up-to-iso");
            }
            let (code, out) = timed(Duration::from_secs(1), &format!("orders {name}"), || ehr(&args))?;
            let got = String::from_utf8_lossy(&out).trim().to_string();
            ensure!(code == 0 && got == want, "{name} (up_to_iso={iso}): got {got:?}, exit {code}");
        }
    }
    Ok("2 orders on the two-element monoid, 0 on the orderless band".into())
}

// Cayley table transcribed by hand, element order c d Px Py Pz 1
const BAND_MUL: [[usize; 6]; 6] = [
    [0, 0, 2, 3, 4, 0],
    [1, 1, 2, 3, 4, 1],
    [2, 2, 2, 3, 4, 2],
    [3, 3, 2, 3, 4, 3],
    [2, 3, 2, 3, 4, 4],
    [0, 1, 2, 3, 4, 5],
];
const BAND_D: [usize; 6] = [5, 5, 4, 4, 4, 5];
const BAND_R: [usize; 6] = [5, 5, 5, 5, 4, 5];

fn c2_orderless_band() -> Check {
    timed(Duration::from_secs(1), "orderless band checks", || {
        let s = example_orderless_band().structure;
        let raw = Raw { n: 6, mul: BAND_MUL.concat(), d: BAND_D.to_vec(), r: BAND_R.to_vec() };
        ensure!(s.table() == raw.mul.as_slice(), "zoo table differs from the transcription");
        ensure!(s.dmap() == BAND_D && s.rmap() == BAND_R, "zoo D/R differ from the transcription");
        ensure!(raw.associative() && raw.localisable() && raw.ehresmann(), "oracle rejects the band");
        ensure!(s.check_associativity().holds, "library rejects associativity");
        ensure!(s.check_localisable().holds && s.check_ehresmann().holds, "library rejects L1-L4 or commutation");
        let via_order = is_de_barros(&s).map_err(|e| e.to_string())?;
        let via_equation = s.check_de_barros_equational();
        ensure!(!via_order.holds && !via_equation.holds, "de Barros should fail both ways");
        ensure!(!raw.os3(&raw.leq_e()) && !raw.de_barros_equation(), "oracle disagrees on de Barros");
        let (code, _) = ehr(&["check", "example://orderless-band", "--law", "de-barros"]);
        ensure!(code == 1, "check --law de-barros exited {code}");
        Ok("Ehresmann, not de Barros by OS3 and by the equation".to_string())
    })?
}

fn c3_lemma_sweep(sweep: &Sweep) -> Check {
    let mut instances = 0;
    for (s, orders) in sweep {
        let leq_e = Raw::of(s).leq_e();
        let lib = rel_of(&derive_orders(s).map_err(|e| e.to_string())?.leq_e);
        ensure!(lib == leq_e, "derived order differs from the oracle on {:?}", s.table());
        for o in orders {
            let o = rel_of(o);
            ensure!(leq_e.iter().zip(&o).all(|(&e, &x)| !e || x), "order below leq_e on {:?}", s.table());
            instances += 1;
        }
    }
    Ok(format!("{} structures, {instances} ordered instances", sweep.len()))
}

fn c4_partial_laws(sweep: &Sweep) -> Check {
    let mut de_barros = 0;
    for (s, _) in sweep {
        let raw = Raw::of(s);
        let le = raw.leq_e();
        ensure!(raw.os2(&le) && raw.os6(&le) && raw.osi(&le), "oracle: leq_e partial laws fail on {:?}", s.table());
        let reports = check_leq_e_partial_laws(s).map_err(|e| e.to_string())?;
        ensure!(reports.iter().take(4).all(|r| r.holds), "library: partial laws fail on {:?}", s.table());
        let os3 = raw.os3(&le);
        let eq = raw.de_barros_equation();
        ensure!(os3 == eq, "oracle OS3 {os3} vs equation {eq} on {:?}", s.table());
        let lib = is_de_barros(s).map_err(|e| e.to_string())?.holds;
        ensure!(lib == os3 && s.check_de_barros_equational().holds == eq, "library de Barros verdict differs");
        de_barros += usize::from(os3);
    }
    Ok(format!("OS1, OS2, OS6, OSI hold; {de_barros} de Barros, verdicts agree"))
}

fn c5_os4(sweep: &Sweep) -> Check {
    for (s, orders) in sweep {
        let raw = Raw::of(s);
        let le = raw.leq_e();
        let mut some_os4 = false;
        for o in orders {
            let rel = rel_of(o);
            let os4 = raw.os4_like(&rel, true, true);
            let os7 = raw.os7(&rel);
            let os = OrderedSemigroup::new(s.clone(), o.clone()).map_err(|e| e.to_string())?;
            ensure!(os.check_os_property(OrderLaw::Os4).holds == os4, "library OS4 differs on {:?}", s.table());
            ensure!(os.check_os_property(OrderLaw::Os7).holds == os7, "library OS7 differs on {:?}", s.table());
            ensure!(!os4 || (rel == le && os7), "OS4 order not leq_e or not OS7 on {:?}", s.table());
            some_os4 |= os4;
        }
        ensure!(some_os4 == raw.de_barros_equation(), "OS4 existence vs de Barros on {:?}", s.table());
    }
    let m = example_two_element_monoid();
    let leq1 = m.ordered(Some("leq1")).map_err(|e| e.to_string())?;
    let raw = Raw::of(&m.structure);
    let rel = rel_of(&leq1.order);
    ensure!(raw.os7(&rel) && !raw.os4_like(&rel, true, true), "two-element monoid leq1 is not OS7 without OS4");
    let os4 = leq1.check_os_property(OrderLaw::Os4);
    ensure!(!os4.holds && leq1.check_os_property(OrderLaw::Os7).holds, "library verdicts on leq1");
    ensure!(os4.witness == Some(vec![1, 0]), "OS4 witness {:?}", os4.witness);
    Ok("OS4 exists iff de Barros, OS4 implies leq_e and OS7; leq1 is OS7 without OS4".into())
}

fn c6_restriction(sweep: &Sweep) -> Check {
    for (s, orders) in sweep {
        let raw = Raw::of(s);
        let le = raw.leq_e();
        let lrr = raw.left_restriction_with_range();
        let rrd = raw.right_restriction_with_domain();
        ensure!(s.check_left_restriction_with_range().holds == lrr, "library left restriction differs");
        ensure!(s.check_right_restriction_with_domain().holds == rrd, "library right restriction differs");
        ensure!(s.check_restriction().holds == (lrr && rrd), "library restriction differs");
        let mut both = false;
        for o in orders {
            let rel = rel_of(o);
            let a = raw.os4_like(&rel, true, false);
            let b = raw.os4_like(&rel, false, true);
            ensure!(a == (lrr && rel == le), "OS4A biconditional fails on {:?}", s.table());
            ensure!(b == (rrd && rel == le), "OS4B biconditional fails on {:?}", s.table());
            let os = OrderedSemigroup::new(s.clone(), o.clone()).map_err(|e| e.to_string())?;
            ensure!(os.check_os_property(OrderLaw::Os4a).holds == a, "library OS4A differs");
            ensure!(os.check_os_property(OrderLaw::Os4b).holds == b, "library OS4B differs");
            both |= a && b;
        }
        ensure!(both == (lrr && rrd), "OS4A and OS4B vs restriction on {:?}", s.table());
    }
    Ok("OS4A, OS4B and the two-sided case agree with the restriction laws".into())
}

/// Ordered zoo instances for the round trip: every entry except Rel(3).
fn zoo_instances() -> Vec<(String, OrderedSemigroup)> {
    let mut out = Vec::new();
    for name in NAMES {
        let entry = by_name(name).unwrap();
        if entry.structure.len() > 64 {
            continue;
        }
        for (o, _) in &entry.orders {
            out.push((format!("{name}#{o}"), entry.ordered(Some(o)).unwrap()));
        }
    }
    out
}

fn all_instances(sweep: &Sweep) -> Vec<(String, OrderedSemigroup)> {
    let mut out = zoo_instances();
    for (i, (s, orders)) in sweep.iter().enumerate() {
        for (j, o) in orders.iter().enumerate() {
            out.push((format!("sweep {i}/{j}"), OrderedSemigroup::new(s.clone(), o.clone()).unwrap()));
        }
    }
    out
}

fn round_trip(label: &str, os: &OrderedSemigroup) -> Result<OrderedCategory, String> {
    let c = category_of(os).map_err(|e| format!("{label}: {e}"))?;
    let back = semigroup_of(&c).map_err(|e| format!("{label}: {e}"))?;
    ensure!(back.base.table() == os.base.table(), "{label}: pseudoproduct differs");
    ensure!(back.base.dmap() == os.base.dmap() && back.base.rmap() == os.base.rmap(), "{label}: D/R differ");
    ensure!(rel_of(&back.order) == rel_of(&os.order), "{label}: order differs");
    let again = category_of(&back).map_err(|e| format!("{label}: {e}"))?;
    ensure!(again.same_structure(&c), "{label}: category direction differs");
    let r = esn_round_trip(os).map_err(|e| format!("{label}: {e}"))?;
    ensure!(r.holds, "{label}: {}", r.detail);
    Ok(c)
}

fn c7_esn(instances: &[(String, OrderedSemigroup)]) -> Check {
    let rel2 = by_name("rel-2").unwrap();
    let os = rel2.ordered(None).map_err(|e| e.to_string())?;
    ensure!(os.len() == 16, "rel-2 has {} elements", os.len());
    timed(Duration::from_secs(5), "rel-2 round trip", || round_trip("rel-2", &os))??;
    let (code, _) = ehr(&["esn", "example://rel-2"]);
    ensure!(code == 0, "esn example://rel-2 exited {code}");
    for (label, os) in instances {
        round_trip(label, os)?;
    }
    Ok(format!("{} ordered instances round trip both ways", instances.len()))
}

fn c8_biaction(instances: &[(String, OrderedSemigroup)]) -> Check {
    for (label, os) in instances {
        let c = category_of(os).map_err(|e| format!("{label}: {e}"))?;
        let b = derive_biaction(&c).map_err(|e| format!("{label}: {e}"))?;
        let r = verify_biaction(&c, &b);
        ensure!(r.holds, "{label}: {} {:?}", r.detail, r.clause);
        for e in c.cat.identities() {
            for x in 0..os.len() {
                ensure!(b.left(e, x) == Some(os.base.mul(e, x)), "{label}: left action differs from the product");
                ensure!(b.right(x, e) == Some(os.base.mul(x, e)), "{label}: right action differs from the product");
            }
        }
    }
    Ok(format!("E1-E6 hold on {} categories; actions match the product", instances.len()))
}

fn c9_oc_equivalences(instances: &[(String, OrderedSemigroup)]) -> Check {
    for (label, os) in instances {
        let c = category_of(os).map_err(|e| format!("{label}: {e}"))?;
        let has = |p| c.check_oc_property(p).holds;
        ensure!(
            has(OcProperty::Oc8a) == (has(OcProperty::Oc4a) && has(OcProperty::Oc6)),
            "{label}: OC8a vs OC4A and OC6"
        );
        ensure!(c.check_prop_oc_equivalences().holds, "{label}: OC equivalence report fails");
        let raw = Raw::of(&os.base);
        let rel = rel_of(&os.order);
        ensure!(raw.os4_like(&rel, true, true) == has(OcProperty::Oc4), "{label}: OS4 vs OC4");
        ensure!(raw.os7(&rel) == has(OcProperty::Oc7), "{label}: OS7 vs OC7");
    }
    Ok(format!("{} categories", instances.len()))
}

fn c10_morphisms() -> Check {
    timed(Duration::from_secs(60), "morphism checks", || {
        let z = example_zero_one_nabla();
        let c = category_of(&z.ordered(None).unwrap()).map_err(|e| e.to_string())?;
        let nabla = z.structure.index_of("nabla").unwrap();
        let (zero, one) = (z.structure.index_of("0").unwrap(), z.structure.index_of("1").unwrap());
        let mut map = vec![0; 3];
        map[zero] = one;
        map[one] = one;
        map[nabla] = nabla;
        let r = is_eoc_morphism(&FunctorCandidate::new(map), &c, &c);
        ensure!(r.functor.holds, "the map is not a functor");
        ensure!(r.bullet_verdicts() == [true, true, false], "bullets {:?}", r.bullet_verdicts());

        let m = example_two_element_monoid();
        let c1 = category_of(&m.ordered(Some("leq1")).unwrap()).map_err(|e| e.to_string())?;
        let c2 = category_of(&m.ordered(Some("leq2")).unwrap()).map_err(|e| e.to_string())?;
        let r = is_eoc_morphism(&FunctorCandidate::identity(2), &c1, &c2);
        ensure!(r.bullet_verdicts() == [false, true, true], "identity bullets {:?}", r.bullet_verdicts());

        let small: Vec<_> = zoo_instances().into_iter().filter(|(_, os)| os.len() <= 3).collect();
        let mut pairs = 0;
        for (sn, s) in &small {
            for (tn, t) in &small {
                let r = morphism_correspondence(s, t, DEFAULT_MAP_CEILING).map_err(|e| e.to_string())?;
                ensure!(r.report.holds, "{sn} -> {tn}: {}", r.report.detail);
                // oracle count of ordered homomorphisms
                let (rs, rt) = (Raw::of(&s.base), Raw::of(&t.base));
                let (ls, lt) = (rel_of(&s.order), rel_of(&t.order));
                let homs = (0..rt.n.pow(rs.n as u32))
                    .filter(|&i| {
                        let f: Vec<usize> = (0..rs.n).map(|k| i / rt.n.pow((rs.n - 1 - k) as u32) % rt.n).collect();
                        rs.all(2, |v| f[rs.m(v[0], v[1])] == rt.m(f[v[0]], f[v[1]]))
                            && rs.elems().all(|a| f[rs.d[a]] == rt.d[f[a]] && f[rs.r[a]] == rt.r[f[a]])
                            && rs.all(2, |v| !ls[v[0] * rs.n + v[1]] || lt[f[v[0]] * rt.n + f[v[1]]])
                    })
                    .count() as u64;
                ensure!(r.morphisms == homs, "{sn} -> {tn}: {} morphisms, oracle {homs}", r.morphisms);
                pairs += 1;
            }
        }
        Ok(format!("both counterexamples reproduce; correspondence on {pairs} pairs"))
    })?
}

fn c11_special_cases() -> Check {
    let pt2 = gen_pt(2).map_err(|e| e.to_string())?;
    let raw = Raw::of(&pt2.structure);
    ensure!(raw.left_restriction_with_range(), "PT(2) is not left restriction with range");
    let functional = raw.all(3, |v| raw.m(v[0], v[1]) != raw.m(v[0], v[2]) || raw.m(raw.r[v[0]], v[1]) == raw.m(raw.r[v[0]], v[2]));
    ensure!(functional && pt2.structure.check_functional().holds, "PT(2) is not functional");
    let leq_e = derive_orders(&pt2.structure).map_err(|e| e.to_string())?.leq_e;
    let c = category_of(&OrderedSemigroup::new(pt2.structure.clone(), leq_e).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let n = c.len();
    let epi = (0..n).all(|x| {
        (0..n).all(|t| (0..n).all(|u| c.cat.comp(x, t).is_none() || c.cat.comp(x, t) != c.cat.comp(x, u) || t == u))
    });
    ensure!(epi && c.check_oc_property(OcProperty::Epi).holds, "not every arrow is an epimorphism");
    ensure!(c.check_oc_property(OcProperty::Oc4a).holds, "OC4A fails");

    let pi = example_partial_injections();
    let leq_e = derive_orders(&pi.structure).map_err(|e| e.to_string())?.leq_e;
    let c = category_of(&OrderedSemigroup::new(pi.structure.clone(), leq_e).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let ids = c.cat.identities();
    let meets = ids.iter().all(|&e| {
        ids.iter().all(|&f| {
            let lower: Vec<usize> = ids.iter().copied().filter(|&g| c.leq(g, e) && c.leq(g, f)).collect();
            lower.iter().any(|&g| lower.iter().all(|&h| c.leq(h, g)))
        })
    });
    ensure!(meets, "identities of the partial-injection category are not a meet-semilattice");
    ensure!(c.check_oc_property(OcProperty::Oc8).holds, "OC8 fails");
    ensure!(c.check_oc_property(OcProperty::Inductive1).holds, "not inductive1");
    Ok("PT(2) functional with epi arrows and OC4A; partial injections inductive1".into())
}

fn c12_determinism() -> Check {
    let mut runs: Vec<Vec<String>> = vec![vec!["sweep".into(), "--max-size".into(), "3".into()]];
    for (name, _) in zoo_instances() {
        runs.push(vec!["esn".into(), format!("example://{name}")]);
        runs.push(vec!["cat".into(), format!("example://{name}"), "--biaction".into()]);
    }
    for args in &runs {
        let mut outs = Vec::new();
        for threads in ["1", "4"] {
            let mut full = vec!["--json", "--threads", threads];
            full.extend(args.iter().map(String::as_str));
            let (code, out) = ehr(&full);
            ensure!(code == 0 || code == 1, "{args:?} exited {code}");
            outs.push(out);
        }
        ensure!(outs[0] == outs[1], "{args:?} differs between 1 and 4 threads");
        let lib = run(["ehr", "--json", "--threads", "2"].into_iter().chain(args.iter().map(String::as_str)));
        ensure!(lib.rendered().as_bytes() == outs[0].as_slice(), "{args:?} differs between library and binary");
    }
    Ok(format!("{} reports byte-identical across 1, 2 and 4 threads", runs.len()))
}

fn main() -> ExitCode {
    let sweep = ordered_sweep();
    let instances = sweep.as_ref().map(|s| all_instances(s)).unwrap_or_default();
    let on_sweep = |f: fn(&Sweep) -> Check| match &sweep {
        Ok(s) => f(s),
        Err(e) => Err(e.clone()),
    };
    let on_instances = |f: fn(&[(String, OrderedSemigroup)]) -> Check| match &sweep {
        Ok(_) => f(&instances),
        Err(e) => Err(e.clone()),
    };
    let results: Vec<(&str, Check)> = vec![
        ("example fidelity", c1_example_fidelity()),
        ("orderless band", c2_orderless_band()),
        ("leq_e below every Ehresmann order", on_sweep(c3_lemma_sweep)),
        ("leq_e partial laws", on_sweep(c4_partial_laws)),
        ("OS4 and de Barros", on_sweep(c5_os4)),
        ("restriction biconditionals", on_sweep(c6_restriction)),
        ("round trip", on_instances(c7_esn)),
        ("biaction", on_instances(c8_biaction)),
        ("OC equivalences", on_instances(c9_oc_equivalences)),
        ("morphism counterexamples", c10_morphisms()),
        ("special cases", c11_special_cases()),
        ("determinism", c12_determinism()),
    ];
    let mut failed = 0;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
