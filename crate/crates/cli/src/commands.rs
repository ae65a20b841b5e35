use crate::args::{
    Cli, Command, ConesArgs, Format, Global, GroupSel, IsolationArgs, LiftArgs, PingpongArgs,
    RealizeArgs, ReconstructArgs, RepArgs, RotArgs,
};
use crate::dispatch::{group_sel, with_group, with_order, CliGroup, GroupTask, OrderedTask};
use crate::output::*;
use crate::svg;
use crate::CliError;
use ordkit_core::circular::{
    build_rep, default_deformation, first_generation, guardian_intervals, k_fold_lift, orbit_config,
    ping_pong_verify, reconstruct_by_generations, rotation_number, BoundaryPoint, CircularConfig,
    CircularOrder, CoverOrbitOrder, OrbitOrder, PiStar, RepKind, Representation,
    DEFAULT_GUARDIAN_RADIUS,
};
use ordkit_core::group::{ball, first_n, Group, Psl2z, TararinGroup, TararinSpec, B3};
use ordkit_core::orders::{
    check_order_axioms, compare, enumerate_partial_cones, isolation_evidence, tararin_orders,
    SignOracle,
};
use ordkit_core::realization::{build_realization, gap_spectrum, DyadicRational, Window};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;
use std::cmp::Ordering;

fn json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| CliError::Domain {
        kind: "Serialization".into(),
        message: e.to_string(),
    })?;
    s.push('\n');
    Ok(s)
}

fn format_or(global: &Global, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = global.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!("this command does not support --format {f:?}").to_lowercase()))
    }
}

fn rep_label(kind: &RepKind) -> String {
    match kind {
        RepKind::Modular => "modular".into(),
        RepKind::Deformed { c, d } => format!("deformed:{}/{},{}/{}", c.0, c.1, d.0, d.1),
    }
}

fn circle_points(cfg: &CircularConfig) -> Vec<CirclePoint> {
    cfg.entries
        .iter()
        .map(|e| CirclePoint {
            word: e.element.to_string(),
            point: (&e.point).into(),
        })
        .collect()
}

fn circle_text(points: &[CirclePoint]) -> String {
    points
        .iter()
        .map(|p| match &p.point {
            PointJson::Finite { num, den } if den == "1" => format!("{}\t{num}\n", p.word),
            PointJson::Finite { num, den } => format!("{}\t{num}/{den}\n", p.word),
            PointJson::Infinite { .. } => format!("{}\tinf\n", p.word),
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Compare { left, right } => {
            let task = CompareTask {
                left,
                right,
                format: format_or(g, Format::Text, &[Format::Text, Format::Json])?,
            };
            with_order(&group_sel(g, GroupSel::B3), g.order.as_deref(), task)
        }
        Command::Ball => with_group(
            &group_sel(g, GroupSel::B3),
            BallTask {
                radius: g.radius.unwrap_or(2),
                format: format_or(g, Format::Text, &[Format::Text, Format::Json])?,
            },
        ),
        Command::Realize(a) => {
            let task = RealizeTask {
                args: a,
                seed: g.seed,
                format: format_or(g, Format::Csv, &[Format::Csv, Format::Json])?,
            };
            with_order(&group_sel(g, GroupSel::B3), g.order.as_deref(), task)
        }
        Command::Cones(a) => {
            format_or(g, Format::Json, &[Format::Json])?;
            with_group(
                &group_sel(g, GroupSel::B3),
                ConesTask {
                    args: a,
                    radius: g.radius.unwrap_or(2),
                },
            )
        }
        Command::Isolation(a) => {
            format_or(g, Format::Json, &[Format::Json])?;
            let task = IsolationTask {
                args: a,
                radius: g.radius.unwrap_or(3),
            };
            with_order(&group_sel(g, GroupSel::B3), g.order.as_deref(), task)
        }
        Command::Tararin => {
            format_or(g, Format::Json, &[Format::Json])?;
            tararin(g)
        }
        Command::Circular(a) => circular(g, a),
        Command::Pingpong(a) => {
            format_or(g, Format::Json, &[Format::Json])?;
            pingpong(g, a)
        }
        Command::Rot(a) => rot(g, a),
        Command::Lift(a) => {
            format_or(g, Format::Json, &[Format::Json])?;
            lift(a)
        }
        Command::Reconstruct(a) => reconstruct(g, a),
        Command::SvgCircle(a) => {
            let rep = build_rep(a.rep.0.clone())?;
            let r = a.ball.or(g.radius).unwrap_or(3);
            let cfg = orbit_config(&rep, &ball(&Psl2z, r), &BoundaryPoint::zero())?;
            let data = guardian_intervals(&rep).ok();
            Ok(svg::circle(&cfg, data.as_ref()))
        }
    }
}

struct CompareTask<'a> {
    left: &'a str,
    right: &'a str,
    format: Format,
}

impl OrderedTask for CompareTask<'_> {
    type Out = String;

    fn run<G: CliGroup, O: SignOracle<G>>(self, group: &G, order: &O) -> Result<String, CliError> {
        let (f, h) = (group.parse(self.left)?, group.parse(self.right)?);
        let relation = match compare(group, order, &f, &h) {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        };
        match self.format {
            Format::Json => json(&CompareDoc {
                schema: schema("compare"),
                group: group.id().to_string(),
                order: order.label(),
                left: self.left.into(),
                right: self.right.into(),
                relation: relation.into(),
            }),
            _ => Ok(format!("{} {relation} {}\n", self.left, self.right)),
        }
    }
}

struct BallTask {
    radius: usize,
    format: Format,
}

impl GroupTask for BallTask {
    type Out = String;

    fn run<G: CliGroup>(self, group: &G) -> Result<String, CliError> {
        let elements: Vec<String> = ball(group, self.radius).iter().map(|g| group.format(g)).collect();
        match self.format {
            Format::Json => json(&BallDoc {
                schema: schema("ball"),
                group: group.id().to_string(),
                radius: self.radius,
                size: elements.len(),
                elements,
            }),
            _ => Ok(elements.iter().map(|w| format!("{w}\n")).collect()),
        }
    }
}

struct RealizeTask<'a> {
    args: &'a RealizeArgs,
    seed: u64,
    format: Format,
}

impl OrderedTask for RealizeTask<'_> {
    type Out = String;

    fn run<G: CliGroup, O: SignOracle<G>>(self, group: &G, order: &O) -> Result<String, CliError> {
        let x0: DyadicRational = self
            .args
            .x0
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid base point `{}`", self.args.x0)))?;
        let mut enumeration = first_n(group, self.args.count);
        if self.args.shuffle && enumeration.len() > 1 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(self.seed);
            enumeration[1..].shuffle(&mut rng);
        }
        let r = build_realization(group, order, &enumeration, x0)?;
        if let Some(path) = &self.args.svg {
            let report = gap_spectrum(group, &r, &Window::full(), &|g| group.highlight(g))?;
            std::fs::write(path, svg::orbit(&r, &report))?;
        }
        let rows: Vec<OrbitRow> = r
            .entries()
            .iter()
            .enumerate()
            .map(|(index, e)| OrbitRow {
                index,
                word: group.format(&e.element),
                numerator: e.value.numerator().to_string(),
                exponent: e.value.exponent(),
            })
            .collect();
        match self.format {
            Format::Json => json(&RealizeDoc {
                schema: schema("realize"),
                group: group.id().to_string(),
                order: order.label(),
                x0: r.x0.to_string(),
                entries: rows,
            }),
            _ => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &rows {
                    w.serialize(row)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
        }
    }
}

fn parse_all<G: Group>(group: &G, words: &[String]) -> Result<Vec<G::Elem>, CliError> {
    words
        .iter()
        .filter(|w| !w.is_empty())
        .map(|w| group.parse(w).map_err(CliError::from))
        .collect()
}

struct ConesTask<'a> {
    args: &'a ConesArgs,
    radius: usize,
}

impl GroupTask for ConesTask<'_> {
    type Out = String;

    fn run<G: CliGroup>(self, group: &G) -> Result<String, CliError> {
        let required = parse_all(group, &self.args.require)?;
        let cones = enumerate_partial_cones(group, self.radius, &required, self.args.budget)?;
        let survivors: Vec<Survivor> = cones
            .iter()
            .map(|c| Survivor {
                assignment: c
                    .assignment
                    .iter()
                    .map(|(g, s)| SignEntry::new(group.format(g), *s))
                    .collect(),
            })
            .collect();
        json(&ConesDoc {
            schema: schema("cones"),
            group: group.id().to_string(),
            radius: self.radius,
            required: self.args.require.clone(),
            count: survivors.len(),
            survivors,
        })
    }
}

struct IsolationTask<'a> {
    args: &'a IsolationArgs,
    radius: usize,
}

impl OrderedTask for IsolationTask<'_> {
    type Out = String;

    fn run<G: CliGroup, O: SignOracle<G>>(self, group: &G, order: &O) -> Result<String, CliError> {
        let s = parse_all(group, &self.args.require)?;
        let report = isolation_evidence(group, order, &s, self.radius, self.args.budget)?;
        json(&IsolationDoc {
            schema: schema("isolation"),
            group: group.id().to_string(),
            order: order.label(),
            required: self.args.require.clone(),
            radius: report.radius,
            survivor_count: report.survivor_count,
            order_survives: report.order_survives,
            all_agree_with_order: report.all_agree_with_order,
        })
    }
}

fn tararin(g: &Global) -> Result<String, CliError> {
    let GroupSel::Tararin(n) = group_sel(g, GroupSel::Tararin(1)) else {
        return Err(CliError::Usage("tararin needs --group klein or tararin:N".into()));
    };
    let spec = TararinSpec::integral(n);
    let group = TararinGroup::new(spec.clone())?;
    let radius = g.radius.unwrap_or(3);
    let gens = group.alphabet();
    let orders = tararin_orders(&spec)?
        .into_iter()
        .map(|o| TararinEntry {
            epsilon: o.epsilon.to_string(),
            generator_signs: gens.iter().map(|s| SignEntry::new(s.name.clone(), o.sign(&s.element))).collect(),
            axioms_clean: check_order_axioms(&group, &o, radius).is_clean(),
        })
        .collect();
    json(&TararinDoc {
        schema: schema("tararin"),
        group: if n == 1 { "klein".into() } else { format!("tararin:{n}") },
        radius,
        orders,
    })
}

fn circular(g: &Global, a: &RepArgs) -> Result<String, CliError> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Text])?;
    let rep = build_rep(a.rep.0.clone())?;
    let radius = a.ball.or(g.radius).unwrap_or(3);
    let cfg = orbit_config(&rep, &ball(&Psl2z, radius), &BoundaryPoint::zero())?;
    let points = circle_points(&cfg);
    match format {
        Format::Text => Ok(circle_text(&points)),
        _ => json(&CircularDoc {
            schema: schema("circular"),
            rep: rep_label(&rep.kind),
            radius,
            points,
        }),
    }
}

fn pingpong(g: &Global, a: &PingpongArgs) -> Result<String, CliError> {
    let rep = build_rep(a.rep.0.clone())?;
    // the modular orbit is not free, so it borrows the default intervals
    let data = match rep.kind {
        RepKind::Modular => guardian_intervals(&build_rep(default_deformation())?)?,
        _ => guardian_intervals(&rep)?,
    };
    let radius = g.radius.unwrap_or(DEFAULT_GUARDIAN_RADIUS);
    let report = ping_pong_verify(&rep, &data, radius)?;
    let intervals = data
        .intervals()
        .iter()
        .map(|j| IntervalJson {
            name: j.name.clone(),
            left: (&j.interval.left).into(),
            right: (&j.interval.right).into(),
            guardians: [j.guardians[0].to_string(), j.guardians[1].to_string()],
        })
        .collect();
    json(&PingpongDoc {
        schema: schema("pingpong"),
        rep: rep_label(&rep.kind),
        passed: report.passed,
        radius: report.radius,
        tested_points: report.tested_points,
        gammas: [data.gammas[0].to_string(), data.gammas[1].to_string()],
        intervals,
        witness: report
            .witness
            .map(|w| serde_json::to_value(w).expect("witness serializes")),
    })
}

fn rot(g: &Global, a: &RotArgs) -> Result<String, CliError> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Text])?;
    let rep = build_rep(a.rep.0.clone())?;
    let element = Psl2z.parse(&a.element)?;
    let cover = k_fold_lift(&rep, a.k)?;
    let r = rotation_number(&cover, &element, a.turns, a.max_period.unwrap_or(2 * a.k))?;
    match format {
        Format::Text => Ok(format!("{}\n", r.rot)),
        _ => json(&RotDoc {
            schema: schema("rot"),
            k: a.k,
            element: element.to_string(),
            turns: a.turns,
            rot: r.rot.into(),
            translation: r.translation.into(),
            period: r.period,
        }),
    }
}

fn lift_with<C: CircularOrder>(
    a: &LiftArgs,
    pi: &PiStar<C>,
    locate: impl Fn(&ordkit_core::group::Psl2zElement) -> (BoundaryPoint, u32),
) -> Result<String, CliError> {
    let g = B3.parse(&a.element)?;
    let p = pi.lift(&g);
    let (point, sheet) = locate(&p.element);
    let sign = if g.is_identity() {
        None
    } else {
        Some(pi.try_sign(&g)?.to_i8())
    };
    json(&LiftDoc {
        schema: schema("lift"),
        element: B3.format(&g),
        k: a.k,
        convention: format!("{:?}", a.convention).to_lowercase(),
        winding: p.winding,
        over: p.element.to_string(),
        point: (&point).into(),
        sheet,
        sign,
    })
}

fn lift(a: &LiftArgs) -> Result<String, CliError> {
    let rep = build_rep(a.rep.0.clone())?;
    if a.k == 1 {
        let pi = PiStar::new(OrbitOrder { rep: &rep }, a.convention.into())?;
        lift_with(a, &pi, |h| (rep.point(h), 0))
    } else {
        let cover = k_fold_lift(&rep, a.k)?;
        let pi = PiStar::new(CoverOrbitOrder { rep: &cover }, a.convention.into())?;
        lift_with(a, &pi, |h| {
            let c = cover.point(h);
            (c.point, c.sheet)
        })
    }
}

fn reconstruct(g: &Global, a: &ReconstructArgs) -> Result<String, CliError> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Text])?;
    let rep: Representation = build_rep(a.rep.0.clone())?;
    let first = orbit_config(&rep, &first_generation(), &BoundaryPoint::zero())?;
    let data = guardian_intervals(&rep)?;
    let cfg = reconstruct_by_generations(&rep, &first, &data, a.depth)?;
    let direct = orbit_config(&rep, &cfg.elements(), &BoundaryPoint::zero())?;
    let points = circle_points(&cfg);
    match format {
        Format::Text => Ok(circle_text(&points)),
        _ => json(&ReconstructDoc {
            schema: schema("reconstruct"),
            rep: rep_label(&rep.kind),
            depth: a.depth,
            size: cfg.len(),
            matches_direct_evaluation: cfg == direct,
            points,
        }),
    }
}
