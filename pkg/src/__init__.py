# semistab package
