# offsets into the 5-letter word, indexed by (Pansiot bit, 0 backbone / 1 leaf)
H_TABLES = {
    (0, 0): "150251053150352053",
    (0, 1): "033332322221211110",
    (1, 0): "143123021324123103",
    (1, 1): "000044440400004444",
}
BLOCK_LENGTH = 18
# factors up to this length are checked exhaustively; longer ones reduce to
# the underlying word
FINITE_CHECK_LENGTH = 576
