pub mod algebra;
pub mod homological;
pub mod lazy;
pub mod linalg;
pub mod module;
