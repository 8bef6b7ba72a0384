//! The `inv` command-line front end. [`run`] does all the work so that the
//! binary stays a one-liner and tests can drive it in-process.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{make_field, parse_gf2_poly, Gf2Poly, IntPoly};
use crate::groups::{invariance_check, CheckMode, CheckOptions, GroupId, GroupKind, Status};
use crate::invariants::{gamma_relation, g_relation, g_relation_signed, gram_det, l_poly, substitute_gram, InvariantId};
use crate::invspace::{
    express_in_b, express_qb, field_coordinates, invariant_space, is_decomposable, jacobian_rank, standard_point,
    InvSpaceError, SpaceOptions, DEFAULT_CAP,
};
use crate::witt::{
    fingerprint, null_cone_test, null_cone_vanishing, realize_gram, same_orbit_generic, GramData, VectorTuple,
    Verdict, WittError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "inv", version, about = "Vector invariants of orthogonal groups in characteristic 2")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Ambient dimension.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Number of vectors.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Degree of the evaluation field GF(2^k).
    #[arg(long, global = true, default_value_t = 8)]
    k: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// auto, symbolic or randomized.
    #[arg(long, global = true, default_value = "auto")]
    mode: CheckMode,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest multidegree component to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Group such as O4, SO(4) or Sp4; plain O or SO for tuple commands.
    #[arg(long, global = true)]
    group: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an invariant or relation polynomial.
    Gen { id: String },
    /// Certify invariance of a named invariant or of a polynomial on stdin.
    Check { id: Option<String> },
    /// Basis of the invariants of one multidegree, e.g. `1,1,1,1`.
    Space { multidegree: String },
    /// Decide whether an invariant is a polynomial in lower-degree ones.
    Decompose { id: Option<String> },
    /// Verify the G relation (odd n) or the Gamma relation (even n).
    Relations,
    /// Rewrite an invariant in terms of Q and B.
    Rewrite {
        id: Option<String>,
        /// Target generators: `qb`, or `b` for multilinear O(2) invariants.
        #[arg(long, default_value = "qb")]
        target: String,
    },
    /// Vectors with prescribed Gram data (JSON file or stdin).
    Realize { file: Option<String> },
    /// Compare the orbits of two generic tuples (two JSON files, or a JSON
    /// array of two tuples on stdin).
    Orbit { left: Option<String>, right: Option<String> },
    /// Null-cone membership of a tuple on stdin, or vanishing of a named
    /// invariant on random totally singular tuples.
    Nullcone {
        id: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Rank of the orbit coordinates at the standard point.
    Jacobian,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Math(String),
}

type CliResult = Result<i32, CliError>;

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

impl From<WittError> for CliError {
    fn from(e: WittError) -> Self {
        match e {
            WittError::NotAlternating(_)
            | WittError::ShapeMismatch(_)
            | WittError::UnsupportedGroup(_)
            | WittError::Invariant(_)
            | WittError::Algebra(_) => CliError::Usage(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<InvSpaceError> for CliError {
    fn from(e: InvSpaceError) -> Self {
        match e {
            InvSpaceError::BadInput(_) | InvSpaceError::Algebra(_) | InvSpaceError::Group(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Math(e.to_string()),
        }
    }
}

struct Ctx<'a> {
    opts: GlobalOpts,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read_stdin(&mut self) -> Result<String, CliError> {
        let mut s = String::new();
        self.stdin.read_to_string(&mut s).map_err(usage)?;
        Ok(s)
    }

    fn read_source(&mut self, file: Option<&str>) -> Result<String, CliError> {
        match file {
            Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}"))),
            None => self.read_stdin(),
        }
    }

    fn line(&mut self, s: impl std::fmt::Display) -> Result<(), CliError> {
        writeln!(self.out, "{s}").map_err(|e| CliError::Math(e.to_string()))
    }

    fn json<T: Serialize>(&mut self, v: &T) -> Result<(), CliError> {
        let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Math(e.to_string()))?;
        self.line(s)
    }

    fn field(&self) -> Result<crate::algebra::FieldDesc, CliError> {
        make_field(self.opts.k).map_err(|e| usage(format!("--k: {e}")))
    }

    fn check_options(&self) -> CheckOptions {
        CheckOptions { mode: self.opts.mode, seed: self.opts.seed, field_k: self.opts.k, ..CheckOptions::default() }
    }

    fn space_options(&self) -> SpaceOptions {
        SpaceOptions { mode: self.opts.mode, seed: self.opts.seed, field_k: self.opts.k, cap: self.opts.cap }
    }

    fn group_flag(&self) -> Result<Option<GroupId>, CliError> {
        self.opts.group.as_deref().map(|g| g.parse::<GroupId>().map_err(|e| usage(format!("--group: {e}")))).transpose()
    }

    fn require_n(&self) -> Result<usize, CliError> {
        match self.opts.n {
            Some(0) => Err(usage("--n must be positive")),
            Some(n) => Ok(n),
            None => Err(usage("--n is required")),
        }
    }

    /// A named invariant, or a GF(2) polynomial read from stdin.
    fn target(&mut self, id: Option<&str>) -> Result<Target, CliError> {
        match id {
            Some(s) => {
                let id: InvariantId = s.parse().map_err(usage)?;
                if let (Some(d), Some(n)) = (id.natural_dimension(), self.opts.n) {
                    if d != n {
                        return Err(usage(format!("--n: {id} lives in dimension {d}, not {n}")));
                    }
                }
                let n = id.natural_dimension().or(self.opts.n);
                let poly = id.build(n).map_err(usage)?;
                Ok(Target { poly: poly.to_gf2(), n, natural: n.and_then(|n| id.natural_group(n)), label: id.to_string() })
            }
            None => {
                let text = self.read_stdin()?;
                let poly = parse_gf2_poly(text.trim()).map_err(usage)?;
                Ok(Target { poly, n: self.opts.n, natural: None, label: "stdin".into() })
            }
        }
    }

    /// `--group`, else the invariant's own group, else O(n).
    fn group_for(&self, t: &Target) -> Result<GroupId, CliError> {
        if let Some(g) = self.group_flag()? {
            return Ok(g);
        }
        t.natural
            .or_else(|| t.n.map(GroupId::orthogonal))
            .ok_or_else(|| usage("--group or --n is required"))
    }

    /// Orthogonal kind for tuple commands: O, SO, or a full group name.
    fn tuple_kind(&self, n: usize) -> Result<GroupKind, CliError> {
        let Some(g) = self.opts.group.as_deref() else {
            return Ok(GroupKind::O);
        };
        match g.trim().to_ascii_uppercase().as_str() {
            "O" => Ok(GroupKind::O),
            "SO" => Ok(GroupKind::SO),
            _ => {
                let id: GroupId = g.parse().map_err(|e| usage(format!("--group: {e}")))?;
                if id.n != n {
                    return Err(usage(format!("--group: {id} does not act on dimension {n}")));
                }
                Ok(id.kind)
            }
        }
    }
}

struct Target {
    poly: Gf2Poly,
    n: Option<usize>,
    natural: Option<GroupId>,
    label: String,
}

#[derive(Serialize)]
struct GenRecord {
    id: String,
    ring: &'static str,
    terms: usize,
    polynomial: String,
}

fn cmd_gen(ctx: &mut Ctx, id: &str) -> CliResult {
    let parsed: InvariantId = id.parse().map_err(usage)?;
    let poly = parsed.build(ctx.opts.n.or(parsed.natural_dimension())).map_err(usage)?;
    if ctx.opts.json {
        let rec = GenRecord { id: parsed.to_string(), ring: poly.ring_name(), terms: poly.len(), polynomial: poly.to_string() };
        ctx.json(&rec)?;
    } else {
        ctx.line(&poly)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    target: String,
    #[serde(flatten)]
    certificate: &'a crate::groups::Certificate,
}

fn cmd_check(ctx: &mut Ctx, id: Option<&str>) -> CliResult {
    let t = ctx.target(id)?;
    let group = ctx.group_for(&t)?;
    let cert = invariance_check(&t.poly, group, &ctx.check_options()).map_err(usage)?;
    if ctx.opts.json {
        ctx.json(&CheckRecord { target: t.label, certificate: &cert })?;
    } else {
        ctx.line(if cert.passed() { "pass" } else { "fail" })?;
        ctx.line(format!("group: {}", cert.group))?;
        ctx.line(format!("mode: {}", cert.mode))?;
        ctx.line(format!("generators checked: {}", cert.generators_checked))?;
        if let Some(p) = cert.points_checked {
            ctx.line(format!("points per element: {p}"))?;
            ctx.line(format!("seed: {}", cert.seed))?;
        }
        if let Some(w) = &cert.witness {
            ctx.line(format!("witness generator: {}", w.generator))?;
            if let Some(m) = &w.monomial {
                ctx.line(format!("witness monomial: {m}"))?;
            }
            if let Some(p) = &w.point {
                ctx.line(format!("witness point: {}", serde_json::to_string(p).unwrap_or_default()))?;
            }
        }
    }
    Ok(if cert.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn parse_multidegree(s: &str) -> Result<Vec<u32>, CliError> {
    let alpha: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| usage(format!("bad multidegree `{s}`"))))
        .collect::<Result<_, _>>()?;
    if alpha.is_empty() {
        return Err(usage("empty multidegree"));
    }
    Ok(alpha)
}

fn cmd_space(ctx: &mut Ctx, multidegree: &str) -> CliResult {
    let alpha = parse_multidegree(multidegree)?;
    let group = match ctx.group_flag()? {
        Some(g) => g,
        None => GroupId::orthogonal(ctx.require_n()?),
    };
    let space = invariant_space(group, &alpha, &ctx.space_options())?;
    let rec = space.record();
    if ctx.opts.json {
        ctx.json(&rec)?;
    } else {
        ctx.line(format!("dimension: {}", rec.dimension))?;
        for b in &rec.basis {
            ctx.line(b)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(ctx: &mut Ctx, id: Option<&str>) -> CliResult {
    let t = ctx.target(id)?;
    let group = ctx.group_for(&t)?;
    let d = is_decomposable(&t.poly, group, &ctx.space_options())?;
    let rec = d.record(group, &t.poly);
    if ctx.opts.json {
        ctx.json(&rec)?;
    } else {
        ctx.line(if rec.decomposable { "decomposable" } else { "indecomposable" })?;
        ctx.line(format!("products considered: {}", rec.products_considered))?;
        for [a, b] in rec.combination.iter().flatten() {
            ctx.line(format!("({a}) * ({b})"))?;
        }
        if let (Some(r), Some(m)) = (&rec.residue, &rec.separating_monomial) {
            ctx.line(format!("separating monomial: {m}"))?;
            ctx.line(format!("residue: {r}"))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RelationRecord {
    n: usize,
    relation: &'static str,
    relation_terms: usize,
    zero_over_int: bool,
    zero_over_gf2: bool,
    /// Evenness of the Gram determinant (odd n) or divisibility of L by 4.
    divisibility: bool,
}

fn relation_report(n: usize) -> Result<RelationRecord, CliError> {
    let math = |e: crate::invariants::InvariantError| CliError::Math(e.to_string());
    let zero = |p: &IntPoly| -> Result<(bool, bool), CliError> {
        let s = substitute_gram(p, n).map_err(math)?;
        Ok((s.is_zero(), s.reduce_mod2().is_zero()))
    };
    if n % 2 == 1 {
        let divisibility = gram_det(n).map_err(math)?.is_divisible_by(2);
        let (int_zero, _) = zero(&g_relation_signed(n).map_err(math)?)?;
        let g = g_relation(n).map_err(math)?;
        let (_, gf2_zero) = zero(&g)?;
        Ok(RelationRecord { n, relation: "G", relation_terms: g.len(), zero_over_int: int_zero, zero_over_gf2: gf2_zero, divisibility })
    } else {
        let divisibility = l_poly(n).map_err(math)?.is_divisible_by(4);
        let g = gamma_relation(n).map_err(math)?;
        let (int_zero, gf2_zero) = zero(&g)?;
        Ok(RelationRecord {
            n,
            relation: "Gamma",
            relation_terms: g.len(),
            zero_over_int: int_zero,
            zero_over_gf2: gf2_zero,
            divisibility,
        })
    }
}

fn cmd_relations(ctx: &mut Ctx) -> CliResult {
    let n = ctx.require_n()?;
    let rec = relation_report(n)?;
    let ok = rec.zero_over_int && rec.zero_over_gf2 && rec.divisibility;
    if ctx.opts.json {
        ctx.json(&rec)?;
    } else if ok {
        ctx.line(format!("{}-relation: 0 (verified over Int and GF(2))", rec.relation))?;
    } else {
        let word = |b: bool| if b { "0" } else { "nonzero" };
        ctx.line(format!(
            "{}-relation: {} over Int, {} over GF(2); divisibility {}",
            rec.relation,
            word(rec.zero_over_int),
            word(rec.zero_over_gf2),
            if rec.divisibility { "holds" } else { "fails" }
        ))?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct RewriteRecord {
    target: String,
    generators: String,
    n: usize,
    expression: String,
}

fn cmd_rewrite(ctx: &mut Ctx, id: Option<&str>, target: &str) -> CliResult {
    let t = ctx.target(id)?;
    let n = t.n.ok_or_else(|| usage("--n is required"))?;
    let expr = match target {
        "qb" => express_qb(&t.poly, n, &ctx.check_options())?,
        "b" => {
            if n % 2 == 1 {
                return Err(usage("--target b needs even n"));
            }
            express_in_b(&t.poly, (n / 2) as u32)?
                .ok_or_else(|| CliError::Math("not in the span of products of B".into()))?
        }
        other => return Err(usage(format!("--target: unknown value `{other}`; expected qb or b"))),
    };
    if ctx.opts.json {
        ctx.json(&RewriteRecord { target: t.label, generators: target.to_string(), n, expression: expr.to_string() })?;
    } else {
        ctx.line(&expr)?;
    }
    Ok(EXIT_OK)
}

fn columns_text(ctx: &mut Ctx, v: &VectorTuple) -> Result<(), CliError> {
    for (i, c) in v.columns.iter().enumerate() {
        let entries: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        ctx.line(format!("v{} = ({})", i + 1, entries.join(", ")))?;
    }
    Ok(())
}

fn cmd_realize(ctx: &mut Ctx, file: Option<&str>) -> CliResult {
    let n = ctx.require_n()?;
    let text = ctx.read_source(file)?;
    let g: GramData = serde_json::from_str(&text).map_err(|e| usage(format!("Gram data: {e}")))?;
    let r = realize_gram(&g, n)?;
    if ctx.opts.json {
        ctx.json(&r)?;
    } else {
        ctx.line(format!("field: GF(2^{}){}", r.tuple.field.degree(), if r.extended { " (extended)" } else { "" }))?;
        columns_text(ctx, &r.tuple)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct OrbitRecord {
    group: String,
    verdict: Verdict,
    left: crate::witt::Fingerprint,
    right: crate::witt::Fingerprint,
}

fn cmd_orbit(ctx: &mut Ctx, left: Option<&str>, right: Option<&str>) -> CliResult {
    let parse = |s: &str| serde_json::from_str::<VectorTuple>(s).map_err(|e| usage(format!("tuple: {e}")));
    let (v1, v2) = match (left, right) {
        (Some(a), Some(b)) => (parse(&ctx.read_source(Some(a))?)?, parse(&ctx.read_source(Some(b))?)?),
        (None, None) => {
            let text = ctx.read_stdin()?;
            let [a, b]: [VectorTuple; 2] =
                serde_json::from_str(&text).map_err(|e| usage(format!("expected a JSON array of two tuples: {e}")))?;
            (a, b)
        }
        _ => return Err(usage("give two tuple files or none")),
    };
    let kind = ctx.tuple_kind(v1.n)?;
    let verdict = same_orbit_generic(&v1, &v2, kind)?;
    let rec = OrbitRecord {
        group: GroupId { kind, n: v1.n }.to_string(),
        verdict,
        left: fingerprint(&v1, kind)?,
        right: fingerprint(&v2, kind)?,
    };
    if ctx.opts.json {
        ctx.json(&rec)?;
    } else {
        ctx.line(match verdict {
            Verdict::Same => "same",
            Verdict::Different => "different",
            Verdict::NotGeneric => "not generic",
        })?;
    }
    Ok(if verdict == Verdict::NotGeneric { EXIT_FAIL } else { EXIT_OK })
}

#[derive(Serialize)]
struct MembershipRecord {
    n: usize,
    m: usize,
    in_null_cone: bool,
}

fn cmd_nullcone(ctx: &mut Ctx, id: Option<&str>, trials: usize) -> CliResult {
    match id {
        Some(s) => {
            let id: InvariantId = s.parse().map_err(usage)?;
            let field = ctx.field()?;
            let cert = null_cone_vanishing(&id, ctx.opts.n, trials, ctx.opts.seed, &field)?;
            if ctx.opts.json {
                ctx.json(&cert)?;
            } else {
                ctx.line(match cert.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                })?;
                ctx.line(format!("vanishes on {} totally singular tuples over GF(2^{})", cert.trials, cert.field.k))?;
            }
            Ok(if cert.status == Status::Pass { EXIT_OK } else { EXIT_FAIL })
        }
        None => {
            let text = ctx.read_stdin()?;
            let v: VectorTuple = serde_json::from_str(&text).map_err(|e| usage(format!("tuple: {e}")))?;
            let inside = null_cone_test(&v);
            if ctx.opts.json {
                ctx.json(&MembershipRecord { n: v.n, m: v.m(), in_null_cone: inside })?;
            } else {
                ctx.line(if inside { "in null-cone" } else { "not in null-cone" })?;
            }
            Ok(if inside { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

#[derive(Serialize)]
struct JacobianRecord {
    n: usize,
    m: usize,
    coordinates: Vec<String>,
    rank: usize,
    full_rank: bool,
}

fn cmd_jacobian(ctx: &mut Ctx) -> CliResult {
    let n = ctx.require_n()?;
    let m = ctx.opts.m.ok_or_else(|| usage("--m is required"))?;
    let field = ctx.field()?;
    let coords = field_coordinates(n, m)?;
    let polys: Vec<Gf2Poly> = coords.iter().map(|c| c.1.clone()).collect();
    let rank = jacobian_rank(&polys, &standard_point(n, m), &field);
    let rec = JacobianRecord { n, m, coordinates: coords.into_iter().map(|c| c.0).collect(), rank, full_rank: rank == polys.len() };
    if ctx.opts.json {
        ctx.json(&rec)?;
    } else {
        ctx.line(format!("rank {} of {} coordinates", rec.rank, rec.coordinates.len()))?;
        ctx.line(rec.coordinates.join(" "))?;
    }
    Ok(if rec.full_rank { EXIT_OK } else { EXIT_FAIL })
}

/// Runs `inv` with `argv` (including the program name) and returns the exit
/// code: 0 on success, 1 on a mathematical failure, 2 on a usage error.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { opts: cli.global, stdin, out: stdout };
    let result = match &cli.command {
        Command::Gen { id } => cmd_gen(&mut ctx, id),
        Command::Check { id } => cmd_check(&mut ctx, id.as_deref()),
        Command::Space { multidegree } => cmd_space(&mut ctx, multidegree),
        Command::Decompose { id } => cmd_decompose(&mut ctx, id.as_deref()),
        Command::Relations => cmd_relations(&mut ctx),
        Command::Rewrite { id, target } => cmd_rewrite(&mut ctx, id.as_deref(), target),
        Command::Realize { file } => cmd_realize(&mut ctx, file.as_deref()),
        Command::Orbit { left, right } => cmd_orbit(&mut ctx, left.as_deref(), right.as_deref()),
        Command::Nullcone { id, trials } => cmd_nullcone(&mut ctx, id.as_deref(), *trials),
        Command::Jacobian => cmd_jacobian(&mut ctx),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Math(msg)) => {
            let _ = writeln!(stderr, "fail: {msg}");
            EXIT_FAIL
        }
    }
}

#[cfg(test)]
mod tests;
