//! Fenchel-Nielsen coordinates on a fixed pants decomposition.

mod coords;
mod distance;
mod format;
mod graph;

pub use coords::{FNCoordinate, StructureGenerator, StructureSource, StructureWindow};
pub use distance::{
    fn_distance, fn_distance_variant, is_upper_bounded, linf_distance, to_linf,
    window_upper_bounded, wolpert_check, Exactness, FnDistance, LinfPoint, Metric, UpperBoundCheck,
    WolpertCheck,
};
pub use format::{
    parse_generator, parse_input, parse_structure, write_generator, write_structure, StructureInput,
};
pub use graph::{validate_pants_graph, PantsGraph, Slot};
