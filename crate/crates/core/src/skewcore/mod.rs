//! Presentations of skew PBW extensions, normal forms and ring arithmetic.

mod element;
mod expr;
mod presentation;
mod ring;
pub mod sample;
mod validate;

pub use element::{SkewElement, SkewMonomial};
pub use expr::{expand_formal, parse_base_element, ExprParser, FormalTerm, RawExpr};
pub use presentation::{PairRelation, Presentation};
pub use ring::SkewRing;
pub use validate::{
    relation_rhs, validate_presentation, validate_presentation_seeded, ValidationReport,
    DEFAULT_SPOT_CHECKS,
};

#[cfg(test)]
mod tests;
