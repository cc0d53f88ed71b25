use std::fs;
use std::path::{Path, PathBuf};

use num::BigRational;

use cubegrowth::generators::{
    finite_as_labeled, graph_product_ball, torus_ball, GeneratorError, Order, ProductGraph,
};
use cubegrowth::growth::{
    cbar_matrix, coefficients_at, davis_growth_closed, euler_trace_ball, growth_matrix_finite,
    growth_matrix_torus_closed, reciprocity_check, reciprocity_failures, stars_embed, star_solver,
    sum_coefficients, verify_ball_exact, verify_ball_truncated, verify_finite,
};
use cubegrowth::exactalg::minus_t_over_one_plus_t;
use cubegrowth::{
    CubeComplex, CubeError, GrowthError, GrowthReport, LabeledBall, SimplicialComplex,
    SimplicialError,
};

use crate::output::Out;
use crate::{BallArgs, ComplexArgs, Format, TorusArgs, Verb};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or an inconsistent combination of options.
    Input(String),
    /// Well-formed input on which the requested computation is not defined.
    Precondition(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) => m,
        }
    }
}

impl From<GrowthError> for CliError {
    fn from(e: GrowthError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<CubeError> for CliError {
    fn from(e: CubeError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

type Res<T> = Result<T, CliError>;

pub fn run(verb: Verb, format: Format) -> Res<(u8, String)> {
    let mut out = Out::new(format);
    match verb {
        Verb::Check(a) => check(&mut out, a)?,
        Verb::Fpoly { file, base } => fpoly(&mut out, &file, base.as_deref())?,
        Verb::Coeffs { file, base } => coeffs(&mut out, &file, &base)?,
        Verb::SumCoeffs(a) => sum_coeffs(&mut out, a)?,
        Verb::Growth(a) => growth(&mut out, a)?,
        Verb::Verify { file } => report(&mut out, &verify_finite(&read_cubes(&file)?)?),
        Verb::Davis { file, degree, radius } => davis(&mut out, &file, degree, radius.unwrap_or(degree))?,
        Verb::Torus(a) => torus(&mut out, a)?,
        Verb::RaagBall(a) => group_ball(&mut out, a, Order::Infinite)?,
        Verb::RacgBall(a) => group_ball(&mut out, a, Order::Two)?,
        Verb::Reciprocity { file, dim, subdiv } => match source(file, dim, subdiv)? {
            Source::File(f) => reciprocity_nerve(&mut out, &f)?,
            Source::Torus(n, k) => reciprocity_torus(&mut out, n, k)?,
        },
        Verb::EulerTrace { file, dim, subdiv } => match source(file, dim, subdiv)? {
            Source::File(f) => {
                let c = read_cubes(&f)?;
                euler(&mut out, &finite_as_labeled(&c, 0)?)?
            }
            Source::Torus(n, k) => euler(&mut out, &torus_ball(n, k, torus_radius(n, k))?)?,
        },
    }
    Ok(out.finish())
}

// ---------------------------------------------------------------- input

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn located(path: &Path, line: usize, message: &str) -> CliError {
    CliError::Input(format!("{}:{line}: {message}", path.display()))
}

fn read_cubes(path: &Path) -> Res<CubeComplex> {
    CubeComplex::parse(&read(path)?).map_err(|e| match e {
        CubeError::Parse { line, message } => located(path, line, &message),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })
}

fn parse_nerve(path: &Path, text: &str) -> Res<SimplicialComplex> {
    SimplicialComplex::parse(text).map_err(|e| match e {
        SimplicialError::Parse { line, message } => located(path, line, &message),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })
}

fn read_nerve(path: &Path) -> Res<SimplicialComplex> {
    parse_nerve(path, &read(path)?)
}

fn read_graph(path: &Path) -> Res<ProductGraph> {
    let text = read(path)?;
    if first_keyword(&text) == Some("facet") {
        return Ok(ProductGraph::racg_from_nerve(&parse_nerve(path, &text)?));
    }
    ProductGraph::parse(&text).map_err(|e| match e {
        GeneratorError::Parse { line, message } => located(path, line, &message),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })
}

fn first_keyword(text: &str) -> Option<&str> {
    text.lines().find_map(|l| l.split('#').next().unwrap_or("").split_whitespace().next())
}

fn vertex(c: &CubeComplex, name: &str) -> Res<usize> {
    c.vertex(name).map_err(|_| CliError::Precondition(format!("no vertex named {name}")))
}

/// The vertices a verb reports on: `--base` alone, or all of them.
fn targets(c: &CubeComplex, base: Option<&str>) -> Res<Vec<usize>> {
    match base {
        Some(b) => Ok(vec![vertex(c, b)?]),
        None => Ok((0..c.vertex_count()).collect()),
    }
}

enum Source {
    File(PathBuf),
    Torus(usize, usize),
}

fn source(file: Option<PathBuf>, dim: Option<usize>, subdiv: Option<usize>) -> Res<Source> {
    match (file, dim, subdiv) {
        (Some(f), None, None) => Ok(Source::File(f)),
        (None, Some(n), Some(k)) => Ok(Source::Torus(n, k)),
        _ => Err(CliError::Input("give either FILE or both --dim and --subdiv".into())),
    }
}

/// Smallest radius at which every lift of the torus action has a complete star.
fn torus_radius(n: usize, k: usize) -> usize {
    n * (k / 2) + n + 1
}

// ---------------------------------------------------------------- verbs

fn check(out: &mut Out, a: ComplexArgs) -> Res<()> {
    let c = read_cubes(&a.file)?;
    if a.base.is_some() {
        return Err(CliError::Input("check does not take --base".into()));
    }
    out.kv("vertices", c.vertex_count());
    out.kv("dimension", c.dimension());
    out.kv("cells", join(c.cell_counts()));
    out.kv("euler", c.euler_char());
    out.verdict("gluing", true, "");
    let npc = c.npc_violation();
    let npc_detail = match &npc {
        Some((v, clique)) if clique.is_empty() => format!("link of {v} has a repeated simplex"),
        Some((v, clique)) => format!("link of {v} is not flag at {{{}}}", clique.join(", ")),
        None => String::new(),
    };
    out.verdict("nonpositively-curved", npc.is_none(), &npc_detail);
    if let Some((v, clique)) = &npc {
        if out.is_machine() {
            out.kv("npc-witness", format!("{v}:{}", clique.join(",")));
        }
    }
    let cat0 = c.cat0_check();
    let detail = if !cat0.connected {
        "disconnected".to_string()
    } else if let Some(m) = &cat0.median_failure {
        format!("triple ({}) has medians {{{}}}", m.triple.join(", "), m.medians.join(", "))
    } else if let Some(u) = &cat0.unfilled {
        format!("corner {} with directions {} spans an unfilled cube", u.corner, u.directions.join(", "))
    } else {
        String::new()
    };
    out.verdict("cat0", cat0.holds(), &detail);
    if let Some(w) = cat0.witness_triple() {
        out.kv("witness", format!("({})", w.join(", ")));
    }
    Ok(())
}

fn fpoly(out: &mut Out, file: &Path, base: Option<&str>) -> Res<()> {
    let text = read(file)?;
    if first_keyword(&text) == Some("facet") {
        if base.is_some() {
            return Err(CliError::Input("--base applies to cube complexes only".into()));
        }
        let k = parse_nerve(file, &text)?;
        out.kv("f", k.f_polynomial());
        out.kv("f-vector", join(k.f_vector()));
        return Ok(());
    }
    let c = read_cubes(file)?;
    for v in targets(&c, base)? {
        out.kv(&format!("f[{}]", c.name(v)), c.vertex_link(v).f_polynomial());
    }
    Ok(())
}

fn coeffs(out: &mut Out, file: &Path, base: &str) -> Res<()> {
    let c = read_cubes(file)?;
    let x = vertex(&c, base)?;
    let closed = coefficients_at(&c, x)?;
    let solved = star_solver(&c.star(x), c.star(x).vertex(base)?)?;
    for (y, v) in &closed {
        out.kv(&format!("c[{base}][{y}]"), v);
    }
    let agree = closed == solved;
    let detail = if agree {
        format!("{} coefficients", closed.len())
    } else {
        let bad: Vec<&String> = closed.keys().filter(|y| closed.get(*y) != solved.get(*y)).collect();
        format!("differ at {bad:?}")
    };
    out.verdict("closed-form-equals-solver", agree, detail);
    Ok(())
}

fn sum_coeffs(out: &mut Out, a: ComplexArgs) -> Res<()> {
    let c = read_cubes(&a.file)?;
    for x in targets(&c, a.base.as_deref())? {
        let (sum, ok) = sum_coefficients(&c, x)?;
        let want = c.vertex_link(x).f_polynomial().substitute(&minus_t_over_one_plus_t());
        let name = c.name(x);
        out.kv(&format!("sum[{name}]"), &sum);
        out.verdict(&format!("sum-rule[{name}]"), ok, format!("expected {want}"));
    }
    Ok(())
}

fn growth(out: &mut Out, a: ComplexArgs) -> Res<()> {
    let c = read_cubes(&a.file)?;
    let rows = targets(&c, a.base.as_deref())?;
    let g = growth_matrix_finite(&c)?;
    for x in rows {
        for y in 0..c.vertex_count() {
            out.kv(&format!("G[{}][{}]", c.name(x), c.name(y)), g.get(x, y));
        }
    }
    Ok(())
}

fn report(out: &mut Out, r: &GrowthReport) {
    out.raw(&if out.is_machine() { r.to_machine() } else { r.to_text() });
    if !r.all_pass() {
        out.mark_failed();
    }
}

fn davis(out: &mut Out, file: &Path, degree: usize, radius: usize) -> Res<()> {
    if degree > radius {
        return Err(CliError::Precondition(format!(
            "degree {degree} exceeds the ball radius {radius}; sphere counts are exact only up to the radius"
        )));
    }
    let nerve = read_nerve(file)?;
    let closed = davis_growth_closed(&nerve)?;
    let series = closed.series(degree).map_err(GrowthError::from)?;
    let ball = graph_product_ball(&ProductGraph::racg_from_nerve(&nerve), radius)?;
    let spheres = ball.sphere_sizes();
    out.kv("growth", &closed);
    out.kv("series", join(series.iter()));
    out.kv("spheres", join(&spheres[..=degree]));
    let bad = series.iter().zip(&spheres).position(|(s, &n)| *s != num_rational(n));
    let detail = match bad {
        Some(i) => format!("first mismatch at degree {i}"),
        None => format!("through degree {degree}"),
    };
    out.verdict("closed-form-equals-ball", bad.is_none(), detail);
    Ok(())
}

fn num_rational(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

fn torus(out: &mut Out, a: TorusArgs) -> Res<()> {
    let radius = a.radius.unwrap_or_else(|| torus_radius(a.dim, a.subdiv));
    let ball = torus_ball(a.dim, a.subdiv, radius)?;
    let (ids, g) = growth_matrix_torus_closed(a.dim, a.subdiv)?;
    let r = verify_ball_exact(&ball, &ids, g)?;
    out.kv("radius", radius);
    out.kv("ball-vertices", ball.complex().vertex_count());
    report(out, &r);
    euler(out, &ball)
}

/// Trace of c̄ at `t = √-1`, compared to `χ(X/G)` when stars embed in the quotient.
fn euler(out: &mut Out, ball: &LabeledBall) -> Res<()> {
    let embed = stars_embed(ball)?;
    let (trace, chi) = euler_trace_ball(ball)?;
    out.kv("euler-trace", &trace);
    match (embed, chi) {
        (true, Some(chi)) => {
            out.kv("quotient-euler", chi);
            out.verdict("euler-trace", trace == BigRational::from_integer(chi.into()), "");
        }
        (false, _) => out.line("euler-trace not compared: stars do not embed in the quotient"),
        (true, None) => out.line("euler-trace not compared: quotient Euler characteristic unknown"),
    }
    Ok(())
}

fn group_ball(out: &mut Out, a: BallArgs, order: Order) -> Res<()> {
    let graph = read_graph(&a.file)?.with_order(order);
    let ball = graph_product_ball(&graph, a.radius)?;
    out.kv("generators", graph.names().join(" "));
    out.kv("ball-vertices", ball.complex().vertex_count());
    out.kv("dimension", ball.dim());
    out.kv("spheres", join(ball.sphere_sizes()));
    out.kv("orbits", ball.orbit_ids().len());
    out.kv("star-complete-radius", ball.star_complete_radius().map_or("none".to_string(), |r| r.to_string()));
    report(out, &verify_ball_truncated(&ball, a.degree)?);
    Ok(())
}

fn reciprocity_nerve(out: &mut Out, file: &Path) -> Res<()> {
    let nerve = read_nerve(file)?;
    let n = (nerve.dimension() + 1) as u32;
    let g = davis_growth_closed(&nerve)?;
    out.kv("growth", &g);
    out.kv("n", n);
    out.verdict("growth-reciprocal", reciprocity_check(&g, n), "");
    out.verdict("dehn-sommerville", nerve.dehn_sommerville_check(n), "");
    Ok(())
}

fn reciprocity_torus(out: &mut Out, n: usize, k: usize) -> Res<()> {
    let ball = torus_ball(n, k, torus_radius(n, k))?;
    let (ids, g) = growth_matrix_torus_closed(n, k)?;
    let c = cbar_matrix(&ball)?;
    out.kv("n", n);
    for (m, what) in [(&c, "cbar"), (&g, "G")] {
        let bad = reciprocity_failures(m, n as u32);
        let cells: Vec<String> = bad.iter().map(|&(i, j)| format!("[{}][{}]", ids[i], ids[j])).collect();
        out.verdict(&format!("{what}-reciprocal"), bad.is_empty(), cells.join(" "));
    }
    Ok(())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
