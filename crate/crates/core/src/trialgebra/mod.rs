//! so₈ in sl₃-window coordinates, the Chevalley table and triality.

pub mod chevalley;
pub mod window;

pub use chevalley::{chevalley_relations_report, h_alpha, x_alpha, y_alpha, ChevalleyTable, RelationCheck};
pub use window::{
    cartan_three_form, eta, membership_equations, min_membership_window, phi_window, phi_window_inv, triality,
    window_act_vector, window_basis, window_bracket, window_killing, Perm3, WindowElement, WindowVector,
};
