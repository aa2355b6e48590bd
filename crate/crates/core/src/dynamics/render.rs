use alloc::vec::Vec;

use super::iterate_orbit;
use crate::error::{Error, Result};
use crate::newton_map::RationalMap;
use crate::rational_core::{Cx, ExtendedPoint};

/// Axis-aligned rectangle of the plane sampled on a `px_w` x `px_h` grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub center: Cx,
    pub width: f64,
    pub height: f64,
    pub px_w: usize,
    pub px_h: usize,
}

impl Viewport {
    pub fn new(center: Cx, width: f64, height: f64, px_w: usize, px_h: usize) -> Result<Self> {
        if px_w == 0 || px_h == 0 {
            return Err(Error::InvalidArgument("viewport needs at least one pixel per axis"));
        }
        if !(width > 0.0 && height > 0.0 && width.is_finite() && height.is_finite()) {
            return Err(Error::InvalidArgument("viewport width and height must be positive"));
        }
        if !(center.re.is_finite() && center.im.is_finite()) {
            return Err(Error::InvalidArgument("viewport center must be finite"));
        }
        Ok(Viewport { center, width, height, px_w, px_h })
    }

    /// Center of pixel `(i, j)`; row 0 is the top edge.
    pub fn pixel_center(&self, i: usize, j: usize) -> Cx {
        let x = self.center.re - self.width / 2.0 + (i as f64 + 0.5) * self.width / self.px_w as f64;
        let y = self.center.im + self.height / 2.0 - (j as f64 + 0.5) * self.height / self.px_h as f64;
        Cx::new(x, y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pixel {
    pub attractor_index: Option<usize>,
    pub iterations: u32,
}

/// Row-major grid of basin memberships, top row first.
#[derive(Clone, Debug, PartialEq)]
pub struct BasinImage {
    pub viewport: Viewport,
    pub pixels: Vec<Pixel>,
}

impl BasinImage {
    /// Assembles an image from rows produced by [`render_row`], in order.
    pub fn from_rows(viewport: Viewport, rows: Vec<Vec<Pixel>>) -> Result<Self> {
        if rows.len() != viewport.px_h || rows.iter().any(|r| r.len() != viewport.px_w) {
            return Err(Error::InvalidArgument("row count or length does not match the viewport"));
        }
        Ok(BasinImage { viewport, pixels: rows.into_iter().flatten().collect() })
    }

    pub fn get(&self, i: usize, j: usize) -> Pixel {
        self.pixels[j * self.viewport.px_w + i]
    }

    /// Fraction of pixels assigned to some attractor.
    pub fn captured_fraction(&self) -> f64 {
        let hit = self.pixels.iter().filter(|p| p.attractor_index.is_some()).count();
        hit as f64 / self.pixels.len() as f64
    }
}

/// One row of the basin image. Each pixel depends only on its own center,
/// so rows may be computed in any order or in parallel.
pub fn render_row(
    n: &RationalMap,
    attractors: &[ExtendedPoint],
    vp: &Viewport,
    j: usize,
    max_iter: usize,
    eps: f64,
) -> Vec<Pixel> {
    (0..vp.px_w)
        .map(|i| {
            let z = ExtendedPoint::Finite(vp.pixel_center(i, j));
            let o = iterate_orbit(n, z, attractors, max_iter, eps);
            Pixel { attractor_index: o.attractor_index, iterations: o.iterations as u32 }
        })
        .collect()
}

pub fn render_basins(
    n: &RationalMap,
    attractors: &[ExtendedPoint],
    vp: &Viewport,
    max_iter: usize,
    eps: f64,
) -> Result<BasinImage> {
    if attractors.is_empty() {
        return Err(Error::InvalidArgument("at least one attractor is required"));
    }
    let rows = (0..vp.px_h).map(|j| render_row(n, attractors, vp, j, max_iter, eps)).collect();
    BasinImage::from_rows(*vp, rows)
}

pub const GREEN: [u8; 3] = [0, 170, 0];
pub const RED: [u8; 3] = [210, 30, 30];
pub const AMBER: [u8; 3] = [255, 176, 0];
pub const BLACK: [u8; 3] = [0, 0, 0];
pub const DARK_GRAY: [u8; 3] = [64, 64, 64];
const EXTRA: [[u8; 3]; 5] = [[40, 90, 220], [200, 60, 200], [0, 190, 190], [150, 100, 40], [230, 230, 230]];

/// Color of attractor `k`: black for infinity, otherwise green, red, amber
/// and then a fixed cycle.
pub fn attractor_color(attractors: &[ExtendedPoint], k: usize) -> [u8; 3] {
    if attractors[k].is_infinity() {
        return BLACK;
    }
    match k {
        0 => GREEN,
        1 => RED,
        2 => AMBER,
        _ => EXTRA[(k - 3) % EXTRA.len()],
    }
}

pub fn pixel_color(attractors: &[ExtendedPoint], p: Pixel) -> [u8; 3] {
    match p.attractor_index {
        Some(k) => attractor_color(attractors, k),
        None => DARK_GRAY,
    }
}

/// Packed RGB bytes, row-major, top row first.
pub fn rgb_bytes(img: &BasinImage, attractors: &[ExtendedPoint]) -> Vec<u8> {
    img.pixels.iter().flat_map(|&p| pixel_color(attractors, p)).collect()
}
