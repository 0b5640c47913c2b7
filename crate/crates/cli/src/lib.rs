//! Command surface for the `ehr` binary.
//!
//! [`run`] parses arguments, executes one subcommand and returns both the
//! human-readable text and the structured [`RunReport`]; the binary only
//! prints and exits. Exit codes: 0 when every requested check holds, 1 when
//! some law fails, 2 on structural, parse or usage errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ehresmann::category::{
    category_of, check_special_correspondences, derive_biaction, esn_round_trip, semigroup_of, verify_biaction,
    OcProperty, OrderedCategory,
};
use ehresmann::format::{emit_structure, example_structure, example_uri, parse_structure, StructureFile};
use ehresmann::orders::{
    derive_orders, enumerate_ehresmann_orders, is_de_barros, smallest_order_check, OrderLaw, OrderedSemigroup,
};
use ehresmann::{par, sweep, zoo, Error, FiniteBiunarySemigroup, LawReport, PartialOrder, SemigroupLaw};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "ehr", version, about = "Checks finite ordered Ehresmann semigroups and categories")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a structure, or check the named laws.
    Check {
        file: String,
        #[arg(long = "law")]
        laws: Vec<String>,
    },
    /// Enumerate the Ehresmann orders of a semigroup.
    Orders {
        file: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Print one of the derived orders.
    Derive {
        file: String,
        #[arg(long, value_enum)]
        order: Which,
    },
    /// Build or read an ordered category and check OC properties.
    Cat {
        file: String,
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long)]
        biaction: bool,
        /// Print the category as a structure file.
        #[arg(long)]
        emit: bool,
    },
    /// Round trip through the category and the special correspondences.
    Esn { file: String },
    /// Enumerate every Ehresmann semigroup of a given size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long = "filter")]
        filters: Vec<String>,
        #[arg(long)]
        up_to_iso: bool,
        /// Permit size 4, which takes noticeably longer.
        #[arg(long)]
        allow_size_4: bool,
    },
    /// Show or emit a named example.
    Example {
        name: String,
        #[arg(long)]
        emit: bool,
    },
    /// Run the structural sweeps over all small Ehresmann semigroups.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    L,
    R,
    E,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureSummary {
    pub kind: String,
    pub size: usize,
    pub has_order: bool,
}

/// Machine-readable result of one invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSummary>,
    pub laws: Vec<LawReport>,
    pub artifacts: BTreeMap<String, Value>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            source: None,
            structure: None,
            laws: Vec::new(),
            artifacts: BTreeMap::new(),
            exit_code: 0,
            error: None,
        }
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Output of [`run`]: what to print and how to exit.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub text: String,
    pub json: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.report.exit_code
    }

    /// The text the binary prints on stdout.
    pub fn rendered(&self) -> String {
        if self.json {
            let mut s = self.report.to_json();
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut report = RunReport::new("usage");
            report.exit_code = code;
            if code != 0 {
                report.error = Some(e.to_string());
            }
            return Outcome { report, text: e.to_string(), json: false };
        }
    };
    let json = cli.json;
    let threads = cli.threads;
    let (report, text) = par::with_threads(threads, move || execute(cli.command));
    Outcome { report, text, json }
}

fn execute(command: Command) -> (RunReport, String) {
    let name = match &command {
        Command::Check { .. } => "check",
        Command::Orders { .. } => "orders",
        Command::Derive { .. } => "derive",
        Command::Cat { .. } => "cat",
        Command::Esn { .. } => "esn",
        Command::Enumerate { .. } => "enumerate",
        Command::Example { .. } => "example",
        Command::Sweep { .. } => "sweep",
    };
    let mut report = RunReport::new(name);
    let mut text = String::new();
    if let Err(e) = dispatch(command, &mut report, &mut text) {
        report.exit_code = 2;
        let _ = writeln!(text, "error: {e}");
        report.error = Some(e.to_string());
    }
    (report, text)
}

fn load(source: &str) -> Result<StructureFile, Error> {
    match example_uri(source) {
        Some(name) => example_structure(name),
        None => {
            let text = std::fs::read_to_string(source)
                .map_err(|e| Error::Structural(format!("cannot read {source}: {e}")))?;
            parse_structure(&text)
        }
    }
}

fn summarize(report: &mut RunReport, source: &str, file: &StructureFile) {
    report.source = Some(source.to_string());
    let has_order = match file {
        StructureFile::Semigroup { order, .. } => order.is_some(),
        StructureFile::Category { .. } => true,
    };
    report.structure = Some(StructureSummary { kind: file.kind().to_string(), size: file.len(), has_order });
}

fn semigroup_part(file: &StructureFile) -> Result<(&FiniteBiunarySemigroup, Option<&PartialOrder>), Error> {
    match file {
        StructureFile::Semigroup { structure, order } => Ok((structure, order.as_ref())),
        StructureFile::Category { .. } => Err(Error::Structural("this command needs a semigroup file".into())),
    }
}

fn push(report: &mut RunReport, text: &mut String, law: LawReport) {
    let _ = writeln!(text, "{}", line(&law));
    report.laws.push(law);
}

fn line(law: &LawReport) -> String {
    let mut s = format!("{}: {}", law.law, if law.holds { "holds" } else { "fails" });
    if let Some(clause) = &law.clause {
        let _ = write!(s, " [{clause}]");
    }
    if let Some(w) = &law.witness {
        let parts: Vec<String> = w.iter().map(usize::to_string).collect();
        let _ = write!(s, " witness ({})", parts.join(", "));
    }
    if !law.detail.is_empty() {
        let _ = write!(s, ": {}", law.detail);
    }
    if let Some(note) = &law.note {
        let _ = write!(s, " ({note})");
    }
    s
}

fn order_covers(s_names: &dyn Fn(usize) -> String, order: &PartialOrder) -> Vec<String> {
    order.covers().into_iter().map(|(a, b)| format!("{} <= {}", s_names(a), s_names(b))).collect()
}

fn dispatch(command: Command, report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    match command {
        Command::Check { file, laws } => cmd_check(&file, &laws, report, text),
        Command::Orders { file, count_only, up_to_iso } => cmd_orders(&file, count_only, up_to_iso, report, text),
        Command::Derive { file, order } => cmd_derive(&file, order, report, text),
        Command::Cat { file, checks, biaction, emit } => cmd_cat(&file, &checks, biaction, emit, report, text),
        Command::Esn { file } => cmd_esn(&file, report, text),
        Command::Enumerate { size, filters, up_to_iso, allow_size_4 } => {
            cmd_enumerate(size, &filters, up_to_iso, allow_size_4, report, text)
        }
        Command::Example { name, emit } => cmd_example(&name, emit, report, text),
        Command::Sweep { max_size } => cmd_sweep(max_size, report, text),
    }
}

/// Every name accepted by `check --law`.
pub const CHECK_NAMES: [&str; 11] = [
    "associativity",
    "localisable",
    "ehresmann",
    "left-restriction",
    "right-restriction",
    "restriction",
    "functional",
    "de-barros",
    "de-barros-law",
    "ehresmann-order",
    "leq-e-containment",
];

fn named_check(
    name: &str,
    s: &FiniteBiunarySemigroup,
    os: Option<&OrderedSemigroup>,
) -> Result<LawReport, Error> {
    let need_order = || os.ok_or_else(|| Error::Structural(format!("`{name}` needs an order section")));
    Ok(match name {
        "associativity" => s.check_associativity(),
        "localisable" => s.check_localisable(),
        "ehresmann" => s.check_ehresmann(),
        "left-restriction" => s.check_left_restriction_with_range(),
        "right-restriction" => s.check_right_restriction_with_domain(),
        "restriction" => s.check_restriction(),
        "functional" => s.check_functional(),
        "de-barros" => is_de_barros(s)?,
        "de-barros-law" => s.check_de_barros_equational(),
        "smallest-order" => smallest_order_check(s)?,
        "ehresmann-order" => need_order()?.check_ehresmann_order(),
        "leq-e-containment" => need_order()?.leq_e_containment()?,
        other => {
            if let Some(law) = SemigroupLaw::from_name(other) {
                s.check_law(law)
            } else if let Some(law) = OrderLaw::from_name(other) {
                need_order()?.check_os_property(law)
            } else {
                return Err(Error::UnknownName(format!("law `{other}`")));
            }
        }
    })
}

fn cmd_check(source: &str, laws: &[String], report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    let file = load(source)?;
    summarize(report, source, &file);
    if let StructureFile::Category { category } = &file {
        return check_category(category, laws, report, text);
    }
    let (s, order) = semigroup_part(&file)?;
    let os = order.map(|o| OrderedSemigroup::new(s.clone(), o.clone())).transpose()?;

    if !laws.is_empty() {
        for name in laws {
            let r = named_check(name, s, os.as_ref())?;
            push(report, text, r);
        }
        report.exit_code = i32::from(report.laws.iter().any(|l| !l.holds));
        return Ok(());
    }

    // classification ladder: later rungs are informational
    push(report, text, s.check_associativity());
    push(report, text, s.check_localisable());
    push(report, text, s.check_ehresmann());
    let ehresmann = report.laws.last().is_some_and(|l| l.holds);
    push(report, text, s.check_left_restriction_with_range());
    push(report, text, s.check_right_restriction_with_domain());
    push(report, text, s.check_restriction());
    push(report, text, s.check_functional());
    if ehresmann {
        push(report, text, is_de_barros(s)?);
    } else {
        push(report, text, s.check_de_barros_equational());
    }
    let mut order_ok = true;
    if let Some(os) = &os {
        let eo = os.check_ehresmann_order();
        order_ok = eo.holds;
        push(report, text, eo);
        for law in [OrderLaw::Os4, OrderLaw::Os4a, OrderLaw::Os4b, OrderLaw::Os7] {
            push(report, text, os.check_os_property(law));
        }
    }
    let associative = report.laws[0].holds;
    report.exit_code = i32::from(!(associative && order_ok));
    Ok(())
}

fn check_category(c: &OrderedCategory, laws: &[String], report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    let names: Vec<String> = if laws.is_empty() {
        vec!["omega-structured".into(), "ehresmann-ordered-category".into()]
    } else {
        laws.to_vec()
    };
    for name in &names {
        let r = category_check(c, name)?;
        push(report, text, r);
    }
    report.exit_code = i32::from(report.laws.iter().any(|l| !l.holds));
    Ok(())
}

fn category_check(c: &OrderedCategory, name: &str) -> Result<LawReport, Error> {
    Ok(match name {
        "omega-structured" => c.check_omega_structured(),
        "ehresmann-ordered-category" => c.check_ehresmann_ordered_category(),
        "oc-equivalences" => c.check_prop_oc_equivalences(),
        other => match OcProperty::from_name(other) {
            Some(p) => c.check_oc_property(p),
            None => return Err(Error::UnknownName(format!("category law `{other}`"))),
        },
    })
}

fn cmd_orders(
    source: &str,
    count_only: bool,
    up_to_iso: bool,
    report: &mut RunReport,
    text: &mut String,
) -> Result<(), Error> {
    let file = load(source)?;
    summarize(report, source, &file);
    let (s, _) = semigroup_part(&file)?;
    let orders = enumerate_ehresmann_orders(s, up_to_iso)?;
    report.artifacts.insert("count".into(), json!(orders.len()));
    report.artifacts.insert("up_to_iso".into(), json!(up_to_iso));
    if count_only {
        let _ = writeln!(text, "{}", orders.len());
        return Ok(());
    }
    let name = |a: usize| s.name(a);
    let listed: Vec<Vec<String>> = orders.iter().map(|o| order_covers(&name, o)).collect();
    let _ = writeln!(text, "{} Ehresmann order(s)", orders.len());
    for (i, covers) in listed.iter().enumerate() {
        let shown = if covers.is_empty() { "equality".to_string() } else { covers.join(", ") };
        let _ = writeln!(text, "  order {}: {shown}", i + 1);
    }
    report.artifacts.insert("orders".into(), json!(listed));
    Ok(())
}

fn cmd_derive(source: &str, which: Which, report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    let file = load(source)?;
    summarize(report, source, &file);
    let (s, _) = semigroup_part(&file)?;
    let d = derive_orders(s)?;
    let (label, order) = match which {
        Which::L => ("l", &d.leq_l),
        Which::R => ("r", &d.leq_r),
        Which::E => ("e", &d.leq_e),
    };
    let name = |a: usize| s.name(a);
    let covers = order_covers(&name, order);
    let _ = writeln!(text, "order {label}:");
    for c in &covers {
        let _ = writeln!(text, "{c}");
    }
    report.artifacts.insert("order".into(), json!(label));
    report.artifacts.insert("covers".into(), json!(covers));
    if let Some(os) = file.ordered_semigroup() {
        let os = os?;
        if which == Which::E {
            push(report, text, os.leq_e_containment()?);
        }
    }
    report.exit_code = i32::from(report.laws.iter().any(|l| !l.holds));
    Ok(())
}

fn category_from(file: &StructureFile) -> Result<OrderedCategory, Error> {
    match file {
        StructureFile::Category { category } => Ok(category.clone()),
        StructureFile::Semigroup { order: Some(_), .. } => category_of(&file.ordered_semigroup().expect("ordered")?),
        StructureFile::Semigroup { order: None, .. } => {
            Err(Error::Structural("a semigroup needs an order section to form its category".into()))
        }
    }
}

fn cmd_cat(
    source: &str,
    checks: &[String],
    biaction: bool,
    emit: bool,
    report: &mut RunReport,
    text: &mut String,
) -> Result<(), Error> {
    let file = load(source)?;
    summarize(report, source, &file);
    let c = category_from(&file)?;
    report.artifacts.insert("identities".into(), json!(c.cat.identities()));
    report.artifacts.insert("composable_pairs".into(), json!(c.cat.composable_pairs()));
    if emit {
        let _ = write!(text, "{}", emit_structure(&StructureFile::Category { category: c.clone() }));
    }
    if checks.is_empty() {
        push(report, text, c.check_omega_structured());
        push(report, text, c.check_ehresmann_ordered_category());
        push(report, text, c.check_prop_oc_equivalences());
        let verdicts: BTreeMap<&str, bool> =
            OcProperty::ALL.iter().map(|&p| (p.name(), c.check_oc_property(p).holds)).collect();
        let shown: Vec<String> = verdicts.iter().map(|(k, v)| format!("{k}={}", if *v { "yes" } else { "no" })).collect();
        let _ = writeln!(text, "properties: {}", shown.join(" "));
        report.artifacts.insert("properties".into(), json!(verdicts));
    } else {
        for name in checks {
            let r = category_check(&c, name)?;
            push(report, text, r);
        }
    }
    if biaction {
        let b = derive_biaction(&c)?;
        push(report, text, verify_biaction(&c, &b));
        let ids = c.cat.identities();
        let n = c.len();
        let left: Vec<Vec<Option<usize>>> = ids.iter().map(|&e| (0..n).map(|x| b.left(e, x)).collect()).collect();
        let right: Vec<Vec<Option<usize>>> = (0..n).map(|x| ids.iter().map(|&e| b.right(x, e)).collect()).collect();
        report.artifacts.insert("biaction".into(), json!({ "identities": ids, "left": left, "right": right }));
    }
    report.exit_code = i32::from(report.laws.iter().any(|l| !l.holds));
    Ok(())
}

fn cmd_esn(source: &str, report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    let file = load(source)?;
    summarize(report, source, &file);
    let os = match &file {
        StructureFile::Category { category } => semigroup_of(category)?,
        StructureFile::Semigroup { order: Some(_), .. } => file.ordered_semigroup().expect("ordered")?,
        StructureFile::Semigroup { order: None, .. } => {
            return Err(Error::Structural("round trip needs an order section".into()))
        }
    };
    push(report, text, esn_round_trip(&os)?);
    let c = category_of(&os)?;
    let b = derive_biaction(&c)?;
    push(report, text, verify_biaction(&c, &b));
    let sc = check_special_correspondences(&os)?;
    for item in &sc.items {
        let _ = writeln!(
            text,
            "  {}: semigroup side {}, category side {}",
            item.name,
            yes_no(item.semigroup_side),
            yes_no(item.category_side)
        );
    }
    report.artifacts.insert("correspondences".into(), json!(sc.items));
    push(report, text, sc.to_report());
    report.exit_code = i32::from(report.laws.iter().any(|l| !l.holds));
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_enumerate(
    size: usize,
    filters: &[String],
    up_to_iso: bool,
    allow_size_4: bool,
    report: &mut RunReport,
    text: &mut String,
) -> Result<(), Error> {
    let all = zoo::enumerate_ehresmann_semigroups(size, up_to_iso, allow_size_4)?;
    for f in filters {
        // reject unknown names before filtering
        named_check(f, &all[0], None)?;
    }
    let kept: Vec<&FiniteBiunarySemigroup> = all
        .iter()
        .filter(|s| filters.iter().all(|f| named_check(f, s, None).map(|r| r.holds).unwrap_or(false)))
        .collect();
    let _ = writeln!(text, "{} structure(s) of size {size}", kept.len());
    let rows: Vec<Value> = kept
        .iter()
        .map(|s| json!({ "mul": s.table(), "D": s.dmap(), "R": s.rmap() }))
        .collect();
    for s in &kept {
        let _ = writeln!(text, "  mul {:?} D {:?} R {:?}", s.table(), s.dmap(), s.rmap());
    }
    report.artifacts.insert("count".into(), json!(kept.len()));
    report.artifacts.insert("structures".into(), Value::Array(rows));
    Ok(())
}

fn cmd_example(name: &str, emit: bool, report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    let file = example_structure(name)?;
    summarize(report, &format!("example://{name}"), &file);
    if emit {
        let _ = write!(text, "{}", emit_structure(&file));
        return Ok(());
    }
    let base = name.split('#').next().unwrap_or(name);
    let entry = zoo::by_name(base)?;
    let _ = writeln!(text, "{}: {} elements", entry.name, entry.structure.len());
    let _ = writeln!(text, "  {}", entry.provenance);
    let order_names: Vec<&str> = entry.orders.iter().map(|(n, _)| n.as_str()).collect();
    if !order_names.is_empty() {
        let _ = writeln!(text, "  orders: {}", order_names.join(", "));
    }
    report.artifacts.insert("provenance".into(), json!(entry.provenance));
    report.artifacts.insert("orders".into(), json!(order_names));
    Ok(())
}

fn cmd_sweep(max_size: usize, report: &mut RunReport, text: &mut String) -> Result<(), Error> {
    if max_size > 3 {
        return Err(Error::TooLarge(format!("sweep of size {max_size}")));
    }
    let r = sweep::sweep(max_size)?;
    let _ = writeln!(
        text,
        "structures per size {:?}, {} ordered instances, {} de Barros",
        r.structures, r.ordered_instances, r.de_barros
    );
    for t in &r.tallies {
        let law = if t.holds() {
            LawReport::pass(t.item.clone()).with_detail(format!("{} instances", t.checked))
        } else {
            LawReport::fail(
                t.item.clone(),
                format!("{} of {} failed; first: {}", t.failed, t.checked, t.first_failure.clone().unwrap_or_default()),
            )
        };
        push(report, text, law);
    }
    report.artifacts.insert("sweep".into(), serde_json::to_value(&r).expect("serializes"));
    report.exit_code = i32::from(!r.holds());
    Ok(())
}
