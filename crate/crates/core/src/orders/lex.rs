use super::{OrderError, Sign, SignOracle};
use crate::group::{ball, Group};

/// The order determined lexicographically by an order on H and an invariant
/// order on G/H: H-elements are signed by `inner`, others by `coset`.
pub struct LexOrder<'g, G: Group, L, M> {
    inner: L,
    coset: M,
    member: Box<dyn Fn(&G::Elem) -> bool + 'g>,
}

impl<'g, G: Group, L: SignOracle<G>, M: Fn(&G::Elem) -> Sign> SignOracle<G> for LexOrder<'g, G, L, M> {
    fn label(&self) -> String {
        format!("lex({})", self.inner.label())
    }

    fn sign(&self, g: &G::Elem) -> Sign {
        if (self.member)(g) {
            self.inner.sign(g)
        } else {
            (self.coset)(g)
        }
    }
}

/// Builds the lexicographic order from `inner` on H and the coset sign
/// `coset(g)` = sign of gH relative to H. The coset sign is spot-checked on
/// ball(`check_radius`) for being constant on cosets, invariant under H,
/// antisymmetric and closed under products.
pub fn lex_extend<'g, G, L, M>(
    group: &'g G,
    inner: L,
    coset: M,
    member: impl Fn(&G::Elem) -> bool + 'g,
    check_radius: usize,
) -> Result<LexOrder<'g, G, L, M>, OrderError>
where
    G: Group,
    L: SignOracle<G>,
    M: Fn(&G::Elem) -> Sign,
{
    let b = ball(group, check_radius);
    let outside: Vec<&G::Elem> = b.iter().filter(|g| !member(g)).collect();
    let inside: Vec<&G::Elem> = b.iter().filter(|g| member(g)).collect();
    let fail = |what: &str, g: &G::Elem| {
        Err(OrderError::InvarianceViolation(format!("{what} at {}", group.format(g))))
    };
    for g in &outside {
        let s = coset(g);
        if coset(&group.invert(g)) == s {
            return fail("antisymmetry", g);
        }
        for h in &inside {
            if coset(&group.multiply(g, h)) != s {
                return fail("not constant on the coset", g);
            }
            if coset(&group.multiply(h, g)) != s {
                return fail("not invariant under H", g);
            }
        }
        if s == Sign::Pos {
            for f in &outside {
                let fg = group.multiply(f, g);
                if coset(f) == Sign::Pos && !member(&fg) && coset(&fg) != Sign::Pos {
                    return fail("not closed under products", &fg);
                }
            }
        }
    }
    Ok(LexOrder {
        inner,
        coset,
        member: Box::new(member),
    })
}

/// The restriction of an order to a subgroup.
pub struct Restricted<O>(pub O);

impl<G: Group, O: SignOracle<G>> SignOracle<G> for Restricted<O> {
    fn label(&self) -> String {
        format!("{}|H", self.0.label())
    }
    fn sign(&self, g: &G::Elem) -> Sign {
        self.0.sign(g)
    }
}

/// The order induced on G/H by an order in which H is convex.
pub struct CosetSign<O>(pub O);

impl<O> CosetSign<O> {
    pub fn sign<G: Group>(&self, g: &G::Elem) -> Sign
    where
        O: SignOracle<G>,
    {
        self.0.sign(g)
    }
}

/// Splits an order with convex subgroup H into its restriction to H and the
/// induced coset order. For g ∉ H the coset gH lies entirely on the side of
/// H that g does, so the coset sign is the sign of g itself.
pub fn lex_decompose<O: Clone>(order: O) -> (Restricted<O>, CosetSign<O>) {
    (Restricted(order.clone()), CosetSign(order))
}
