//! Orbits, critical-orbit basins, Julia-set topology predictions and basin
//! rasterization.

mod orbit;
mod render;
mod topology;

pub use orbit::{
    classify_critical_orbits, iterate_orbit, CriticalOrbits, OrbitResult, ANALYSIS_MAX_ITER, CONFIRM_STEPS,
    DEFAULT_EPS, RENDER_MAX_ITER,
};
pub use render::{
    attractor_color, pixel_color, render_basins, render_row, rgb_bytes, BasinImage, Pixel, Viewport, AMBER,
    BLACK, DARK_GRAY, GREEN, RED,
};
pub use topology::{julia_topology_predict, JuliaClass, JuliaTopology};
