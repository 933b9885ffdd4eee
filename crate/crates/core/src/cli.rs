//! Command-line surface: argument parsing, reports, and the `Ω` cache.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::omega;
use crate::exact_algebra::{Poly, RatFunc, Rational};
use crate::green::{graded_table, solve_with_omega, GreenError, GreenSolution};
use crate::partitions::{partitions_of, BiPartition, Partition};
use crate::residual::{
    center_coordinates, confluence_class, enumerate_subspaces, is_residual, jumps,
    residual_by_extremities, MParam, SubspaceType,
};
use crate::springer::{
    f_bc, join, m_square_part, phi, psi, sigma_point, sigma_subspace, split, unipotent_set,
    xi_eta_of_point, SpringerError, UnipotentLabel,
};
use crate::symbols::{msymbol, order_basis, similarity_classes, Variant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

const CACHE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid value for --{flag}: {msg}")]
    Usage { flag: &'static str, msg: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage { .. } => EXIT_USAGE,
            _ => EXIT_INVARIANT,
        }
    }
}

impl From<GreenError> for CliError {
    fn from(e: GreenError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

impl From<SpringerError> for CliError {
    fn from(e: SpringerError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "hecke-green", version, about = "Symbols, Springer maps and Green functions for type B")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Residual subspaces, central characters and confluence classes.
    Residual(Common),
    /// Ordered basis with a-values and m-symbols.
    Symbols(Common),
    /// Springer correspondents of residual subspaces.
    Springer(SpringerArgs),
    /// Unipotent labels with their subspace types and symbol classes.
    Unipotent(Common),
    /// Solve the Green function equation and print graded tables.
    Green(GreenArgs),
    /// Run the property suite up to a given rank.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long)]
    pub n: usize,
    /// Half-integer such as 2, 7/2 or -1/2.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct SpringerArgs {
    #[command(flatten)]
    pub common: Common,
    /// A-side parts of a single subspace type, e.g. 3+7+9.
    #[arg(long)]
    pub a_parts: Option<String>,
    /// Residual partition of a single subspace type.
    #[arg(long)]
    pub b_part: Option<String>,
    /// A unipotent label to send through φ.
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct GreenArgs {
    #[command(flatten)]
    pub common: Common,
    /// Relabel constituents by ⊗ε.
    #[arg(long)]
    pub twist: bool,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Residual,
    Symbols,
    Springer,
    Unipotent,
    Green,
    Verify,
}

/// Validated settings of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub m: MParam,
    pub command: CommandKind,
    pub format: Format,
    pub seed: u64,
    pub twist: bool,
    pub cache_dir: PathBuf,
}

fn parse_m(s: &str) -> Result<MParam, CliError> {
    s.parse().map_err(|e: crate::residual::ResidualError| CliError::Usage { flag: "m", msg: e.to_string() })
}

fn parse_partition(flag: &'static str, s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(|e: crate::partitions::PartitionError| CliError::Usage { flag, msg: e.to_string() })
}

fn default_cache_dir() -> PathBuf {
    std::env::temp_dir().join("hecke-green-cache")
}

impl RunConfig {
    fn from_common(c: &Common, command: CommandKind) -> Result<Self, CliError> {
        Ok(RunConfig {
            n: c.n,
            m: parse_m(&c.m)?,
            command,
            format: c.format,
            seed: c.seed,
            twist: false,
            cache_dir: default_cache_dir(),
        })
    }
}

// ---------------------------------------------------------------- cache

#[derive(Serialize, Deserialize)]
struct OmegaFile {
    version: u32,
    n: usize,
    omega: Vec<Vec<Vec<String>>>,
}

fn poly_to_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_from_strings(v: &[String]) -> Option<Poly> {
    v.iter().map(|s| s.parse::<Rational>().ok()).collect::<Option<Vec<_>>>().map(Poly::from_coeffs)
}

fn read_cache(path: &Path, n: usize) -> Option<Vec<Vec<Poly>>> {
    let text = fs::read_to_string(path).ok()?;
    let file: OmegaFile = serde_json::from_str(&text).ok()?;
    if file.version != CACHE_VERSION || file.n != n {
        return None;
    }
    let om: Vec<Vec<Poly>> = file
        .omega
        .iter()
        .map(|row| row.iter().map(|c| poly_from_strings(c)).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let k = crate::partitions::bipartitions(n).len();
    (om.len() == k && om.iter().all(|r| r.len() == k)).then_some(om)
}

/// `Ω` for rank `n`, read from `dir` when a valid cache file exists and
/// recomputed (and rewritten) otherwise.
pub fn cached_omega(dir: &Path, n: usize) -> Result<Vec<Vec<Poly>>, CliError> {
    let path = dir.join(format!("omega-n{n}.json"));
    if let Some(om) = read_cache(&path, n) {
        return Ok(om);
    }
    let om = omega(n).map_err(|e| CliError::Invariant(e.to_string()))?;
    let file = OmegaFile {
        version: CACHE_VERSION,
        n,
        omega: om.iter().map(|r| r.iter().map(poly_to_strings).collect()).collect(),
    };
    // an unwritable cache only costs a recomputation next time
    if fs::create_dir_all(dir).is_ok() {
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, serde_json::to_string(&file)?).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
    Ok(om)
}

// ---------------------------------------------------------------- reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRow {
    #[serde(rename = "type")]
    pub kind: String,
    pub a_parts: Partition,
    pub b_part: Partition,
    pub central_character: String,
    pub jumps: String,
    pub confluence: Vec<BiPartition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub n: usize,
    pub m: String,
    pub subspaces: Vec<SubspaceRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolRow {
    pub bipartition: BiPartition,
    pub a: i64,
    pub block: usize,
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolsReport {
    pub n: usize,
    pub m: String,
    pub rows: Vec<SymbolRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpringerRow {
    #[serde(rename = "type")]
    pub kind: String,
    pub class: Vec<BiPartition>,
    pub label: Partition,
    pub round_trip: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpringerReport {
    pub n: usize,
    pub m: String,
    pub rows: Vec<SpringerRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentRow {
    pub label: Partition,
    #[serde(rename = "type")]
    pub kind: String,
    pub class: Vec<BiPartition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentReport {
    pub n: usize,
    pub m: String,
    pub rows: Vec<UnipotentRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnInfo {
    pub label: Partition,
    #[serde(rename = "type")]
    pub kind: String,
    pub central_character: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenReport {
    pub n: usize,
    pub m: String,
    pub seed: u64,
    pub twist: bool,
    pub basis: Vec<BiPartition>,
    pub a_values: Vec<i64>,
    pub blocks: Vec<Vec<usize>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "Lambda")]
    pub lambda: Vec<Vec<RatFuncJson>>,
    /// Column (compact label) to degree to row labels, with repetition.
    pub tables: BTreeMap<String, BTreeMap<usize, Vec<String>>>,
    pub columns: BTreeMap<String, ColumnInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
}

// ---------------------------------------------------------------- commands

fn type_of(a: &BiPartition, m: MParam) -> Result<(UnipotentLabel, SubspaceType), SpringerError> {
    let l = psi(a, m)?;
    let t = f_bc(&l)?;
    Ok((l, t))
}

pub fn cmd_residual(cfg: &RunConfig) -> Result<ResidualReport, CliError> {
    let mut rows = Vec::new();
    for t in enumerate_subspaces(cfg.n, cfg.m) {
        let cc = center_coordinates(&t, cfg.m);
        let js = jumps(&t.b_part, cfg.m).map_err(SpringerError::from)?;
        let conf = confluence_class(&cc, cfg.n, cfg.m).map_err(SpringerError::from)?;
        rows.push(SubspaceRow {
            kind: t.describe(),
            a_parts: t.a_parts.clone(),
            b_part: t.b_part.clone(),
            central_character: cc.to_string(),
            jumps: js.to_string(),
            confluence: conf,
        });
    }
    Ok(ResidualReport { n: cfg.n, m: cfg.m.to_string(), subspaces: rows })
}

pub fn cmd_symbols(cfg: &RunConfig) -> Result<SymbolsReport, CliError> {
    let basis = order_basis(cfg.n, cfg.m, cfg.seed);
    let ids = basis.block_ids();
    let rows = basis
        .items
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let s = msymbol(a, cfg.m, Variant::Plain).map_err(|e| CliError::Invariant(e.to_string()))?;
            Ok(SymbolRow { bipartition: a.clone(), a: basis.a_values[i], block: ids[i], top: s.top, bottom: s.bottom })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(SymbolsReport { n: cfg.n, m: cfg.m.to_string(), rows })
}

fn springer_row(t: &SubspaceType, m: MParam) -> Result<SpringerRow, CliError> {
    let class = sigma_subspace(t, m, Variant::Plain)?;
    let (label, back) = type_of(&class[0], m)?;
    let round_trip = back.a_parts == t.a_parts && center_coordinates(&back, m) == center_coordinates(t, m);
    Ok(SpringerRow { kind: t.describe(), class, label: label.parts, round_trip })
}

pub fn cmd_springer(cfg: &RunConfig, args: &SpringerArgs) -> Result<SpringerReport, CliError> {
    let m = cfg.m;
    let mut rows = Vec::new();
    if let Some(l) = &args.label {
        let parts = parse_partition("label", l)?;
        let label = UnipotentLabel::new(parts, m).map_err(|e| CliError::Usage { flag: "label", msg: e.to_string() })?;
        let class = phi(&label)?;
        let t = f_bc(&label)?;
        let round_trip = psi(&class[0], m)? == label;
        rows.push(SpringerRow { kind: t.describe(), class, label: label.parts, round_trip });
    } else if args.a_parts.is_some() || args.b_part.is_some() {
        let a = parse_partition("a-parts", args.a_parts.as_deref().unwrap_or(""))?;
        let b = parse_partition("b-part", args.b_part.as_deref().unwrap_or(""))?;
        if !is_residual(&b, m) {
            return Err(CliError::Usage { flag: "b-part", msg: format!("{b} is not residual at m = {m}") });
        }
        rows.push(springer_row(&SubspaceType::new(a, b), m)?);
    } else {
        for t in enumerate_subspaces(cfg.n, m) {
            rows.push(springer_row(&t, m)?);
        }
    }
    let n = rows.first().map_or(cfg.n, |r| r.class[0].weight());
    Ok(SpringerReport { n, m: m.to_string(), rows })
}

pub fn cmd_unipotent(cfg: &RunConfig) -> Result<UnipotentReport, CliError> {
    let rows = unipotent_set(cfg.n, cfg.m)
        .into_iter()
        .map(|l| {
            let kind = f_bc(&l)?.describe();
            let class = phi(&l)?;
            Ok(UnipotentRow { label: l.parts, kind, class })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(UnipotentReport { n: cfg.n, m: cfg.m.to_string(), rows })
}

fn ratfunc_json(r: &RatFunc) -> RatFuncJson {
    RatFuncJson { num: poly_to_strings(r.num()), den: poly_to_strings(r.den()) }
}

pub fn green_solution(cfg: &RunConfig) -> Result<GreenSolution, CliError> {
    let om = cached_omega(&cfg.cache_dir, cfg.n)?;
    let sol = solve_with_omega(order_basis(cfg.n, cfg.m, cfg.seed), &om)?;
    sol.check_invariants()?;
    sol.check_column_labels()?;
    Ok(sol)
}

pub fn cmd_green(cfg: &RunConfig) -> Result<GreenReport, CliError> {
    let sol = green_solution(cfg)?;
    let k = sol.basis.items.len();
    let mut p = Vec::with_capacity(k);
    for i in 0..k {
        let row = (0..k)
            .map(|j| {
                sol.p.get(i, j).to_poly().and_then(|q| q.int_coeffs()).ok_or_else(|| {
                    CliError::Invariant(format!("P entry ({i},{j}) is not an integer polynomial"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        p.push(row);
    }
    let lambda = (0..k).map(|i| (0..k).map(|j| ratfunc_json(sol.lambda.get(i, j))).collect()).collect();
    let mut tables = BTreeMap::new();
    let mut columns = BTreeMap::new();
    for a in &sol.basis.items {
        let t = graded_table(&sol, a, cfg.twist)?;
        let rows = t.multisets().into_iter().map(|(l, v)| (l, v.iter().map(BiPartition::compact).collect())).collect();
        tables.insert(a.compact(), rows);
        let (label, st) = type_of(a, cfg.m)?;
        columns.insert(
            a.compact(),
            ColumnInfo {
                label: label.parts,
                kind: st.describe(),
                central_character: center_coordinates(&st, cfg.m).to_string(),
            },
        );
    }
    Ok(GreenReport {
        n: cfg.n,
        m: cfg.m.to_string(),
        seed: cfg.seed,
        twist: cfg.twist,
        basis: sol.basis.items.clone(),
        a_values: sol.basis.a_values.clone(),
        blocks: sol.basis.blocks.clone(),
        p,
        lambda,
        tables,
        columns,
    })
}

fn check(name: &str, f: impl FnOnce() -> Result<(), String>) -> CheckResult {
    match f() {
        Ok(()) => CheckResult { name: name.into(), passed: true, detail: String::new() },
        Err(d) => CheckResult { name: name.into(), passed: false, detail: d },
    }
}

fn param_range(n: usize) -> impl Iterator<Item = MParam> {
    let lim = 2 * n as i64;
    (-lim..=lim).map(MParam::from_twice)
}

pub fn cmd_verify(max_n: usize, cache_dir: &Path) -> VerifyReport {
    let mut checks = Vec::new();
    checks.push(check("residuality equivalence", || {
        for n in 0..=max_n {
            for m in param_range(n) {
                for lam in partitions_of(n) {
                    if is_residual(&lam, m) != residual_by_extremities(&lam, m) {
                        return Err(format!("{lam} at m = {m}"));
                    }
                }
            }
        }
        Ok(())
    }));
    checks.push(check("jump weight", || {
        for n in 0..=max_n {
            for m in param_range(n) {
                for lam in partitions_of(n).into_iter().filter(|l| is_residual(l, m)) {
                    let j = jumps(&lam, m).map_err(|e| e.to_string())?;
                    let s: i64 = j.jumps.iter().map(|&x| x + 1).sum();
                    if s != 2 * n as i64 + m_square_part(m) {
                        return Err(format!("{lam} at m = {m}: {j}"));
                    }
                }
            }
        }
        Ok(())
    }));
    checks.push(check("points and bipartitions", || {
        for n in 0..=max_n {
            for m in param_range(n) {
                for lam in partitions_of(n).into_iter().filter(|l| is_residual(l, m)) {
                    let j = jumps(&lam, m).map_err(|e| e.to_string())?;
                    let a = xi_eta_of_point(&j, m).map_err(|e| e.to_string())?;
                    let lc = join(&a, m).map_err(|e| e.to_string())?;
                    let back = split(&lc, m).map_err(|e| e.to_string())?.result;
                    let s = split(&lam, m).map_err(|e| e.to_string())?.result;
                    let class = sigma_point(&j, m).map_err(|e| e.to_string())?;
                    if back != a || !class.contains(&s) {
                        return Err(format!("{lam} at m = {m}"));
                    }
                }
            }
        }
        Ok(())
    }));
    checks.push(check("commuting triangle", || {
        for n in 1..=max_n {
            for t in -2 * (n as i64 - 1)..=2 * (n as i64 - 1) {
                let m = MParam::from_twice(t);
                for typ in enumerate_subspaces(n, m) {
                    let row = springer_row(&typ, m).map_err(|e| e.to_string())?;
                    if !row.round_trip {
                        return Err(format!("{} at m = {m}", typ.describe()));
                    }
                }
            }
        }
        Ok(())
    }));
    checks.push(check("phi/psi round trip", || {
        for n in 0..=max_n {
            for m in param_range(n) {
                for class in similarity_classes(n, m) {
                    let l = psi(&class[0], m).map_err(|e| e.to_string())?;
                    if phi(&l).map_err(|e| e.to_string())? != class {
                        return Err(format!("{} at m = {m}", class[0]));
                    }
                }
            }
        }
        Ok(())
    }));
    checks.push(check("green invariants", || {
        for n in 0..=max_n.min(3) {
            let om = cached_omega(cache_dir, n).map_err(|e| e.to_string())?;
            for t in -6..=6 {
                let m = MParam::from_twice(t);
                let sol = solve_with_omega(order_basis(n, m, 0), &om).map_err(|e| e.to_string())?;
                sol.check_invariants().map_err(|e| format!("n={n} m={m}: {e}"))?;
            }
        }
        Ok(())
    }));
    VerifyReport { max_n, checks }
}

// ---------------------------------------------------------------- rendering

fn row_text(v: &[String]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let k = v[i..].iter().take_while(|x| **x == v[i]).count();
        out.push(if k > 1 { format!("{k}{}", v[i]) } else { v[i].clone() });
        i += k;
    }
    out.join("+")
}

fn render_green(r: &GreenReport) -> String {
    let mut s = format!("n = {}, m = {}\n", r.n, r.m);
    for (i, a) in r.basis.iter().enumerate().rev() {
        let key = a.compact();
        let info = &r.columns[&key];
        s.push_str(&format!(
            "{key}  a={}  λ=({})  {}  {}\n",
            r.a_values[i],
            info.label.compact(),
            info.kind,
            info.central_character
        ));
        for (l, row) in &r.tables[&key] {
            s.push_str(&format!("    {l:>3}  {}\n", row_text(row)));
        }
    }
    s
}

fn render_text(out: &mut dyn Write, cmd: &Command, v: &serde_json::Value) -> std::io::Result<()> {
    match cmd {
        Command::Green(_) => {
            let r: GreenReport = serde_json::from_value(v.clone()).map_err(std::io::Error::other)?;
            write!(out, "{}", render_green(&r))
        }
        Command::Residual(_) => {
            let r: ResidualReport = serde_json::from_value(v.clone()).map_err(std::io::Error::other)?;
            for row in &r.subspaces {
                let conf: Vec<String> = row.confluence.iter().map(BiPartition::compact).collect();
                writeln!(out, "{}  {}  jumps {}  [{}]", row.kind, row.central_character, row.jumps, conf.join(" "))?;
            }
            Ok(())
        }
        Command::Symbols(_) => {
            let r: SymbolsReport = serde_json::from_value(v.clone()).map_err(std::io::Error::other)?;
            for row in &r.rows {
                writeln!(out, "{}  a={}  block {}  {:?} / {:?}", row.bipartition.compact(), row.a, row.block, row.top, row.bottom)?;
            }
            Ok(())
        }
        Command::Springer(_) => {
            let r: SpringerReport = serde_json::from_value(v.clone()).map_err(std::io::Error::other)?;
            for row in &r.rows {
                let class: Vec<String> = row.class.iter().map(BiPartition::compact).collect();
                let ok = if row.round_trip { "ok" } else { "MISMATCH" };
                writeln!(out, "{}  ({})  {} elements: {}  {ok}", row.kind, row.label.compact(), class.len(), class.join(" "))?;
            }
            Ok(())
        }
        Command::Unipotent(_) => {
            let r: UnipotentReport = serde_json::from_value(v.clone()).map_err(std::io::Error::other)?;
            for row in &r.rows {
                let class: Vec<String> = row.class.iter().map(BiPartition::compact).collect();
                writeln!(out, "({})  {}  {}", row.label.compact(), row.kind, class.join(" "))?;
            }
            Ok(())
        }
        Command::Verify(_) => {
            let r: VerifyReport = serde_json::from_value(v.clone()).map_err(std::io::Error::other)?;
            for c in &r.checks {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict}  {}  {}", c.name, c.detail)?;
            }
            Ok(())
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((format, value, ok)) => {
            let res = match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap_or_default()),
                Format::Text => render_text(out, &cli.command, &value),
            };
            if let Err(e) = res {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INVARIANT;
            }
            if ok {
                EXIT_OK
            } else {
                let _ = writeln!(err, "error: property suite reported failures");
                EXIT_INVARIANT
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: &Command) -> Result<(Format, serde_json::Value, bool), CliError> {
    let (format, value, ok) = match cmd {
        Command::Residual(c) => {
            let cfg = RunConfig::from_common(c, CommandKind::Residual)?;
            (c.format, to(&cmd_residual(&cfg)?)?, true)
        }
        Command::Symbols(c) => {
            let cfg = RunConfig::from_common(c, CommandKind::Symbols)?;
            (c.format, to(&cmd_symbols(&cfg)?)?, true)
        }
        Command::Springer(a) => {
            let cfg = RunConfig::from_common(&a.common, CommandKind::Springer)?;
            (a.common.format, to(&cmd_springer(&cfg, a)?)?, true)
        }
        Command::Unipotent(c) => {
            let cfg = RunConfig::from_common(c, CommandKind::Unipotent)?;
            (c.format, to(&cmd_unipotent(&cfg)?)?, true)
        }
        Command::Green(g) => {
            let mut cfg = RunConfig::from_common(&g.common, CommandKind::Green)?;
            cfg.twist = g.twist;
            if let Some(d) = &g.cache_dir {
                cfg.cache_dir = d.clone();
            }
            (g.common.format, to(&cmd_green(&cfg)?)?, true)
        }
        Command::Verify(v) => {
            let dir = v.cache_dir.clone().unwrap_or_else(default_cache_dir);
            let r = cmd_verify(v.max_n, &dir);
            let ok = r.checks.iter().all(|c| c.passed);
            (v.format, to(&r)?, ok)
        }
    };
    Ok((format, value, ok))
}

fn to<T: Serialize>(v: &T) -> Result<serde_json::Value, CliError> {
    Ok(serde_json::to_value(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["hecke-green"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = run_str(&["green", "--n", "2", "--m", "1/3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--m"), "{err}");
        let (code, _, _) = run_str(&["green", "--n", "x"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, err) = run_str(&["springer", "--n", "0", "--m", "2", "--b-part", "[q]"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--b-part"));
        let (code, _, _) = run_str(&["residual", "--n", "2", "--m", "0.5"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn residual_report() {
        let (code, out, _) = run_str(&["residual", "--n", "3", "--m", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let r: ResidualReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.subspaces.len(), 9);
        let (_, out, _) = run_str(&["residual", "--n", "0", "--m", "2", "--format", "json"]);
        let r: ResidualReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.subspaces.len(), 1);
        let (_, out, _) = run_str(&["residual", "--n", "3", "--m", "5", "--format", "json"]);
        let r: ResidualReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.subspaces.len(), 10);
        assert!(r.subspaces.iter().all(|s| s.confluence.len() == 1));
    }

    #[test]
    fn springer_queries() {
        let (code, out, _) = run_str(&["springer", "--n", "1", "--m", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let r: SpringerReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert!(r.rows.iter().all(|x| x.round_trip));
        let (code, out, _) = run_str(&[
            "springer", "--n", "35", "--m", "7/2", "--label", "14+13+13+12+10+7+7+4+1+1", "--format", "json",
        ]);
        assert_eq!(code, 0, "{out}");
        let r: SpringerReport = serde_json::from_str(&out).unwrap();
        assert!(r.rows[0].class.contains(&BiPartition::from_parts(&[1, 2, 3, 4, 4, 4, 4], &[4, 9])));
        let (code, out, _) = run_str(&["springer", "--n", "1", "--m", "-1/2"]);
        assert_eq!(code, 0);
        assert!(out.lines().count() >= 1);
    }

    #[test]
    fn green_json_round_trip_and_cache() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let (code, out, err) = run_str(&["green", "--n", "1", "--m", "1", "--format", "json", "--cache-dir", d]);
        assert_eq!(code, 0, "{err}");
        let r: GreenReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.p, vec![vec![vec![1], vec![1]], vec![vec![], vec![0, 1]]]);
        assert_eq!(serde_json::from_str::<GreenReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
        let cache = dir.path().join("omega-n1.json");
        assert!(cache.exists());
        fs::write(&cache, "garbage").unwrap();
        let (code, again, _) = run_str(&["green", "--n", "1", "--m", "1", "--format", "json", "--cache-dir", d]);
        assert_eq!(code, 0);
        assert_eq!(again, out);
        assert!(read_cache(&cache, 1).is_some());
        let (_, twisted, _) =
            run_str(&["green", "--n", "1", "--m", "1", "--format", "json", "--twist", "--cache-dir", d]);
        let t: GreenReport = serde_json::from_str(&twisted).unwrap();
        assert_eq!(t.tables["(1,-)"][&0], vec!["(-,1)".to_string()]);
    }

    #[test]
    fn text_reports_are_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        for cmd in ["residual", "symbols", "springer", "unipotent"] {
            let a = run_str(&[cmd, "--n", "3", "--m", "2"]);
            let b = run_str(&[cmd, "--n", "3", "--m", "2"]);
            assert_eq!(a.0, 0, "{cmd}: {}", a.2);
            assert_eq!(a, b);
        }
        let a = run_str(&["green", "--n", "3", "--m", "2", "--seed", "3", "--cache-dir", d]);
        assert_eq!(a.0, 0, "{}", a.2);
        assert!(a.1.contains("(12,-)+(3,-)"));
        assert_eq!(a, run_str(&["green", "--n", "3", "--m", "2", "--seed", "3", "--cache-dir", d]));
    }

    #[test]
    fn verify_small() {
        let dir = tempfile::tempdir().unwrap();
        let (code, out, _) =
            run_str(&["verify", "--max-n", "3", "--cache-dir", dir.path().to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }
}
