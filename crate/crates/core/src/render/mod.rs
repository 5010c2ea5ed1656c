//! SVG emission with the notation's visual vocabulary: orange input arrows,
//! green output arrows, dashed gray mutation arrows, black function boxes,
//! asterisk footnotes.

mod outline_font;
mod svg;
mod theme;

pub use svg::{render, render_with, RenderError, RenderOptions};
pub use theme::{Theme, ThemeError};
