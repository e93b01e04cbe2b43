"""C-transfinite diameter toolkit."""
