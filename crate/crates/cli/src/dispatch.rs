use crate::args::{Global, GroupSel};
use crate::CliError;
use ordkit_core::circular::{k_fold_lift, CoverOrbitOrder, LiftConvention, PiStar, Representation};
use ordkit_core::group::{
    B3Element, DirectSum, DirectSumElement, Group, Psl2z, Psl2zElement, RationalElement,
    RationalGroup, TararinElement, TararinGroup, TararinSpec, B3,
};
use ordkit_core::orders::{
    rational_order, DdOrder, DirectSumOrder, EpsilonSignature, Sign, SignOracle, TararinOrder,
};

/// Groups the CLI can enumerate, with the subgroup whose orbit the
/// realization plot highlights around the base point.
pub trait CliGroup: Group {
    fn highlight(&self, g: &Self::Elem) -> bool {
        self.is_identity(g)
    }
}

impl CliGroup for B3 {
    fn highlight(&self, g: &B3Element) -> bool {
        g.in_sigma2_subgroup()
    }
}

impl CliGroup for Psl2z {
    fn highlight(&self, g: &Psl2zElement) -> bool {
        g.is_identity()
    }
}

impl CliGroup for DirectSum {
    fn highlight(&self, g: &DirectSumElement) -> bool {
        g.in_g(self.k.saturating_sub(1))
    }
}

impl CliGroup for TararinGroup {
    fn highlight(&self, g: &TararinElement) -> bool {
        g.in_level(1)
    }
}

impl CliGroup for RationalGroup {
    fn highlight(&self, g: &RationalElement) -> bool {
        self.is_identity(g)
    }
}

pub trait GroupTask {
    type Out;
    fn run<G: CliGroup>(self, group: &G) -> Result<Self::Out, CliError>;
}

pub trait OrderedTask {
    type Out;
    fn run<G: CliGroup, O: SignOracle<G>>(self, group: &G, order: &O) -> Result<Self::Out, CliError>;
}

pub fn group_sel(global: &Global, default: GroupSel) -> GroupSel {
    global.group.clone().unwrap_or(default)
}

pub fn with_group<T: GroupTask>(sel: &GroupSel, task: T) -> Result<T::Out, CliError> {
    match sel {
        GroupSel::B3 => task.run(&B3),
        GroupSel::Psl2z => task.run(&Psl2z),
        GroupSel::Sum(k) => task.run(&DirectSum::new(*k)),
        GroupSel::Tararin(n) => task.run(&TararinGroup::new(TararinSpec::integral(*n))?),
        GroupSel::Dyadic(k) => task.run(&RationalGroup::dyadic(*k)),
    }
}

fn reciprocal(label: Option<&str>) -> Result<bool, CliError> {
    match label.unwrap_or("natural") {
        "natural" => Ok(false),
        "reciprocal" => Ok(true),
        l => Err(CliError::Usage(format!("unknown order `{l}`: expected natural or reciprocal"))),
    }
}

pub fn with_order<T: OrderedTask>(sel: &GroupSel, label: Option<&str>, task: T) -> Result<T::Out, CliError> {
    match sel {
        GroupSel::B3 => match label.unwrap_or("dd") {
            "dd" => task.run(&B3, &DdOrder),
            l => {
                let k: u32 = l
                    .strip_prefix('c')
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| CliError::Usage(format!("unknown order `{l}` on b3: expected dd or c<k>")))?;
                let rep = Representation::deformed();
                let cover = k_fold_lift(&rep, k)?;
                let order = PiStar::new(CoverOrbitOrder { rep: &cover }, LiftConvention::Normalized)?;
                task.run(&B3, &order)
            }
        },
        GroupSel::Psl2z => Err(CliError::Domain {
            kind: "NoLeftOrder".into(),
            message: "psl2z has torsion and carries circular orders only; see `circular`".into(),
        }),
        GroupSel::Sum(k) => task.run(
            &DirectSum::new(*k),
            &DirectSumOrder {
                reciprocal: reciprocal(label)?,
            },
        ),
        GroupSel::Dyadic(k) => task.run(&RationalGroup::dyadic(*k), &rational_order(reciprocal(label)?)),
        GroupSel::Tararin(n) => {
            let group = TararinGroup::new(TararinSpec::integral(*n))?;
            let epsilon = match label {
                None => EpsilonSignature(vec![Sign::Pos; n + 1]),
                Some(l) => EpsilonSignature::parse(l)
                    .filter(|e| e.0.len() == n + 1)
                    .ok_or_else(|| CliError::Usage(format!("order `{l}` is not a signature of length {}", n + 1)))?,
            };
            task.run(&group, &TararinOrder { epsilon })
        }
    }
}
