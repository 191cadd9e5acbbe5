# Games over posets test suite
