use super::{
    B3Element, DirectSumElement, GroupError, GroupId, Psl2zElement, RationalElement,
    TararinElement,
};
use serde::{Deserialize, Serialize};

/// A group element tagged with its group, serialized as
/// `{"group": …, "normal_form": …}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "group", content = "normal_form", rename_all = "lowercase")]
pub enum Element {
    B3(B3Element),
    Psl2z(Psl2zElement),
    Tararin(TararinElement),
    DirectSum(DirectSumElement),
    Rational(RationalElement),
}

impl Element {
    pub fn group(&self) -> GroupId {
        match self {
            Element::B3(_) => GroupId::B3,
            Element::Psl2z(_) => GroupId::Psl2z,
            Element::Tararin(_) => GroupId::Tararin,
            Element::DirectSum(_) => GroupId::DirectSum,
            Element::Rational(_) => GroupId::Rational,
        }
    }

    /// Product for the groups whose multiplication needs no extra data.
    pub fn multiply(&self, other: &Element) -> Result<Element, GroupError> {
        use super::{DirectSum, Group};
        match (self, other) {
            (Element::B3(g), Element::B3(h)) => Ok(Element::B3(g.mul(h))),
            (Element::Psl2z(g), Element::Psl2z(h)) => Ok(Element::Psl2z(g.mul(h))),
            (Element::DirectSum(g), Element::DirectSum(h)) => {
                Ok(Element::DirectSum(DirectSum::new(u32::MAX).multiply(g, h)))
            }
            (Element::Rational(g), Element::Rational(h)) => {
                Ok(Element::Rational(RationalElement(g.0 + h.0)))
            }
            (Element::Tararin(_), Element::Tararin(_)) => Err(GroupError::InvalidSpec(
                "Tararin products need the group spec".into(),
            )),
            (a, b) => Err(GroupError::Mismatch {
                expected: a.group(),
                found: b.group(),
            }),
        }
    }
}
