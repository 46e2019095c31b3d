"""Population diversity measures and Monte-Carlo diversity simulations."""
