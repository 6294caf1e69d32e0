//! String link diagrams and the Tong-Yang-Ma matrices obtained by
//! eliminating arc generators through monomial relations.

mod diagram;
mod linking;
mod relations;

pub use diagram::{ArcId, Crossing, Diagram, DiagramBuilder};
pub use linking::{kernel_agreement, kernel_predicate, KernelTheorem, LinkingProfile};
pub use relations::{
    eliminate, normal_form, normal_form_matrix, relations_of, self_writhe, self_writhe_correct, tym_matrix,
    tym_matrix_with, LambdaRelation, Mode, NormalForm,
};
