#include "dichotic/reference_table.h"

#include <array>

namespace dichotic {

namespace {

constexpr std::nullopt_t kNone = std::nullopt;

// Transcribed verbatim; chord type labels are repeated on each PPN row.
constexpr std::array<ReferenceRow, 165> kRows = {{
    {"3v1", "0,1,2", 1, 60, 0, 0, 0, 0, ""},
    {"3v1", "0-,2,1+", 3, 19, 1, -1, -1, 1, ""},
    {"3v1", "1-,0+,2+", 2, 16, kNone, -3, -3, kNone, ""},
    {"3v2", "0,1,3", 1, 48, 0, 0, 0, 0, ""},
    {"3v2", "0-,3,1+", 3, 13, 1, -2, -1, 1, ""},
    {"3v2", "1-,0+,3+", 2, 10, kNone, -4, -3, kNone, ""},
    {"3v3", "0,2,3", 1, 48, 0, 0, 0, 0, ""},
    {"3v3", "2-,0,3+", 3, 13, 1, -3, -1, 2, ""},
    {"3v3", "0-,3-,2+", 2, 10, kNone, -4, -3, kNone, ""},
    {"3v4", "0,1,4", 1, 38, 1, 0, 0, 0, ""},
    {"3v4", "0-,4,1+", 3, 8, 2, -3, -1, 1, ""},
    {"3v4", "1-,0+,4+", 2, 6, kNone, -5, -3, kNone, ""},
    {"3v5", "0,2,4", 1, 38, 2, 0, 0, 0, "секундовый"},
    {"3v5", "0-,4,2+", 3, 11, 3, -2, -1, 2, "секундовый"},
    {"3v5", "2-,0+,4+", 2, 6, kNone, -5, -3, kNone, "секундовый"},
    {"3v6", "0,3,4", 1, 38, 1, 0, 0, 0, ""},
    {"3v6", "3-,0,4+", 3, 8, 2, -2, -1, 1, ""},
    {"3v6", "0-,4-,3+", 2, 6, kNone, -4, -3, kNone, ""},
    {"3v7", "0,1,5", 1, 32, 1, 0, 0, 0, ""},
    {"3v7", "0-,5,1+", 3, 5, 2, -2, -1, 2, ""},
    {"3v7", "1-,0+,5+", 2, 4, kNone, -5, -3, kNone, ""},
    {"3v8", "0,2,5", 1, 30, 2, 0, 0, 0, ""},
    {"3v8", "0-,5,2+", 3, 7, 4, -2, -1, 2, ""},
    {"3v8", "2-,0+,5+", 2, 4, kNone, -5, -3, kNone, ""},
    {"3v9", "0,3,5", 1, 30, 2, 0, 0, 0, ""},
    {"3v9", "3-,0,5+", 3, 7, 4, -2, -1, 2, ""},
    {"3v9", "0-,5-,3+", 2, 4, kNone, -4, -3, kNone, ""},
    {"3v10", "0,4,5", 1, 32, 1, 0, 0, 0, ""},
    {"3v10", "4-,0,5+", 3, 5, 2, -3, -1, 2, ""},
    {"3v10", "0-,5-,4+", 2, 4, kNone, -4, -2, kNone, ""},
    {"3v11", "0,1,6", 1, 44, 0, 0, 0, 0, ""},
    {"3v11", "0-,6,1+", 3, 11, 1, -2, -1, 1, ""},
    {"3v11", "0-,1+,6+", 2, 4, kNone, -4, -3, kNone, ""},
    {"3v12", "0,2,6", 1, 40, 2, 0, 0, 0, ""},
    {"3v12", "0-,2,6+", 3, 11, 3, -3, -1, 3, ""},
    {"3v12", "0-,2+,6+", 2, 6, kNone, -4, -2, kNone, ""},
    {"3v13", "0,3,6", 1, 38, 1, 0, 0, 0, "уменьшенный"},
    {"3v13", "0-,3,6+", 3, 10, 2, -3, -1, 3, "уменьшенный"},
    {"3v13", "0-,3-,6+", 2, 10, kNone, -3, -2, kNone, "уменьшенный"},
    {"3v14", "0,4,6", 1, 40, 1, 0, 0, 0, ""},
    {"3v14", "0-,4,6+", 3, 11, 2, -2, -1, 3, ""},
    {"3v14", "0-,4-,6+", 2, 6, kNone, -3, -2, kNone, ""},
    {"3v15", "0,5,6", 1, 44, 0, 0, 0, 0, ""},
    {"3v15", "5-,0,6+", 3, 11, 1, -2, -1, 1, ""},
    {"3v15", "0-,5-,6+", 2, 4, kNone, -3, -2, kNone, ""},
    {"3v16", "0,1,7", 1, 42, 0, 0, 0, 0, ""},
    {"3v16", "0-,7,1+", 3, 10, 1, -2, -1, 1, ""},
    {"3v16", "1-,0+,7+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v17", "0,2,7", 1, 22, 3, 0, 0, 0, "suspended задержанный"},
    {"3v17", "0-,7,2+", 3, 3, 4, -2, -1, 2, "suspended задержанный"},
    {"3v17", "2-,0+,7+", 2, 2, kNone, -4, -3, kNone, "suspended задержанный"},
    {"3v18", "0,3,7", 1, 18, 4, 0, 0, 0, "минор"},
    {"3v18", "0-,7,3+", 3, 4, 5, -2, -1, 3, "минор"},
    {"3v18", "3-,0+,7+", 2, 2, kNone, -4, -3, kNone, "минор"},
    {"3v19", "0,4,7", 1, 18, 5, 0, 0, 0, "мажор"},
    {"3v19", "4-,0,7+", 3, 4, 5, -1, -1, 3, "мажор"},
    {"3v19", "0-,7-,4+", 2, 2, kNone, -2, -2, kNone, "мажор"},
    {"3v20", "0,5,7", 1, 22, 3, 0, 0, 0, "suspended задержанный"},
    {"3v20", "5-,0,7+", 3, 3, 5, -2, -1, 2, "suspended задержанный"},
    {"3v20", "0-,7-,5+", 2, 2, kNone, -3, -2, kNone, "suspended задержанный"},
    {"3v21", "0,6,7", 1, 42, 1, 0, 0, 0, ""},
    {"3v21", "6-,0,7+", 3, 10, 2, -2, -1, 1, ""},
    {"3v21", "0-,7-,6+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v22", "0,1,8", 1, 32, 1, 0, 0, 0, ""},
    {"3v22", "0-,8,1+", 3, 5, 2, -2, -1, 1, ""},
    {"3v22", "0-,1+,8+", 2, 2, kNone, -4, -3, kNone, ""},
    {"3v23", "0,2,8", 1, 42, 2, 0, 0, 0, ""},
    {"3v23", "2-,0,8+", 3, 12, 3, -2, -1, 2, ""},
    {"3v23", "2-,0+,8+", 2, 8, kNone, -3, -2, kNone, ""},
    {"3v24", "0,3,8", 1, 22, 5, 0, 0, 0, "мажор"},
    {"3v24", "0-,8,3+", 3, 6, 5, -1, -1, 3, "мажор"},
    {"3v24", "0-,3+,8+", 2, 4, kNone, -3, -3, kNone, "мажор"},
    {"3v25", "0,4,8", 1, 20, 2, 0, 0, 0, "увеличенный"},
    {"3v25", "0-,4,8+", 3, 6, 3, -2, -1, 3, "увеличенный"},
    {"3v25", "0-,4-,8+", 2, 6, kNone, -3, -2, kNone, "увеличенный"},
    {"3v26", "0,5,8", 1, 22, 4, 0, 0, 0, "минор"},
    {"3v26", "5-,0,8+", 3, 6, 5, -2, -1, 3, "минор"},
    {"3v26", "0-,5-,8+", 2, 4, kNone, -3, -2, kNone, "минор"},
    {"3v27", "0,6,8", 1, 42, 2, 0, 0, 0, ""},
    {"3v27", "0-,8,6+", 3, 12, 3, -2, -1, 2, ""},
    {"3v27", "0-,8-,6+", 2, 8, kNone, -3, -2, kNone, ""},
    {"3v28", "0,7,8", 1, 32, 1, 0, 0, 0, ""},
    {"3v28", "7-,0,8+", 3, 5, 2, -2, -1, 1, ""},
    {"3v28", "0-,7-,8+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v29", "0,1,9", 1, 42, 1, 0, 0, 0, ""},
    {"3v29", "0-,9,1+", 3, 10, 2, -2, -1, 1, ""},
    {"3v29", "0-,1+,9+", 2, 8, kNone, -4, -2, kNone, ""},
    {"3v30", "0,2,9", 1, 30, 2, 0, 0, 0, ""},
    {"3v30", "0-,9,2+", 3, 7, 4, -2, -1, 2, ""},
    {"3v30", "0-,2+,9+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v31", "0,3,9", 1, 40, 1, 0, 0, 0, ""},
    {"3v31", "3-,0,9+", 3, 11, 2, -2, -1, 2, ""},
    {"3v31", "0-,3-,9+", 2, 10, kNone, -3, -2, kNone, ""},
    {"3v32", "0,4,9", 1, 22, 4, 0, 0, 0, "минор"},
    {"3v32", "0-,4,9+", 3, 5, 5, -2, -1, 3, "минор"},
    {"3v32", "0-,4+,9+", 2, 4, kNone, -3, -2, kNone, "минор"},
    {"3v33", "0,5,9", 1, 22, 5, 0, 0, 0, "мажор"},
    {"3v33", "0-,5,9+", 3, 5, 5, -1, -1, 3, "мажор"},
    {"3v33", "0-,5-,9+", 2, 4, kNone, -2, -2, kNone, "мажор"},
    {"3v34", "0,6,9", 1, 40, 2, 0, 0, 0, "квартовый"},
    {"3v34", "0-,9,6+", 3, 11, 3, -2, -1, 3, "квартовый"},
    {"3v34", "0-,6+,9+", 2, 10, kNone, -3, -2, kNone, "квартовый"},
    {"3v35", "0,7,9", 1, 30, 3, 0, 0, 0, ""},
    {"3v35", "7-,0,9+", 3, 7, 4, -2, -1, 3, ""},
    {"3v35", "0-,7-,9+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v36", "0,8,9", 1, 42, 1, 0, 0, 0, ""},
    {"3v36", "8-,0,9+", 3, 10, 2, -2, -1, 3, ""},
    {"3v36", "0-,8-,9+", 2, 8, kNone, -3, -2, kNone, ""},
    {"3v37", "0,1,10", 1, 48, 1, 0, 0, 0, ""},
    {"3v37", "0-,10,1+", 3, 13, 2, -1, -1, 1, ""},
    {"3v37", "0-,1+,10+", 2, 12, kNone, -3, -2, kNone, ""},
    {"3v38", "0,2,10", 1, 38, 2, 0, 0, 0, ""},
    {"3v38", "0-,10,2+", 3, 11, 3, -2, -1, 2, ""},
    {"3v38", "0-,2+,10+", 2, 8, kNone, -4, -2, kNone, ""},
    {"3v39", "0,3,10", 1, 26, 3, 0, 0, 0, ""},
    {"3v39", "0-,3,10+", 3, 6, 4, -2, -1, 2, ""},
    {"3v39", "0-,3+,10+", 2, 2, kNone, -4, -2, kNone, ""},
    {"3v40", "0,4,10", 1, 38, 3, 0, 0, 0, ""},
    {"3v40", "4-,0,10+", 3, 10, 4, -2, -1, 2, ""},
    {"3v40", "0-,4-,10+", 2, 6, kNone, -2, -1, kNone, ""},
    {"3v41", "0,5,10", 1, 22, 3, 0, 0, 0, ""},
    {"3v41", "0-,5,10+", 3, 4, 5, -2, -1, 1, ""},
    {"3v41", "0-,5-,10+", 2, 4, kNone, -2, -1, kNone, ""},
    {"3v42", "0,6,10", 1, 38, 1, 0, 0, 0, ""},
    {"3v42", "0-,10,6+", 3, 10, 2, -2, -1, 2, ""},
    {"3v42", "0-,6+,10+", 2, 6, kNone, -3, -2, kNone, ""},
    {"3v43", "0,7,10", 1, 26, 3, 0, 0, 0, ""},
    {"3v43", "0-,7,10+", 3, 6, 3, -2, -1, 3, ""},
    {"3v43", "0-,7-,10+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v44", "0,8,10", 1, 38, 3, 0, 0, 0, ""},
    {"3v44", "8-,0,10+", 3, 11, 3, -2, -1, 2, ""},
    {"3v44", "0-,8-,10+", 2, 8, kNone, -2, -1, kNone, ""},
    {"3v45", "0,9,10", 1, 48, 1, 0, 0, 0, ""},
    {"3v45", "9-,0,10+", 3, 13, 2, -2, -1, 1, ""},
    {"3v45", "0-,9-,10+", 2, 12, kNone, -2, -1, kNone, ""},
    {"3v46", "0,1,11", 1, 56, 0, 0, 0, 0, ""},
    {"3v46", "0-,11,1+", 3, 17, 1, -1, -1, 1, ""},
    {"3v46", "0-,1+,11+", 2, 14, kNone, -3, -3, kNone, ""},
    {"3v47", "0,2,11", 1, 48, 1, 0, 0, 0, ""},
    {"3v47", "0-,2,11+", 3, 14, 2, -2, -1, 2, ""},
    {"3v47", "0-,2+,11+", 2, 12, kNone, -3, -2, kNone, ""},
    {"3v48", "0,3,11", 1, 38, 1, 0, 0, 0, ""},
    {"3v48", "0-,3,11+", 3, 9, 2, -1, -1, 2, ""},
    {"3v48", "0-,3+,11+", 2, 8, kNone, -2, -2, kNone, ""},
    {"3v49", "0,4,11", 1, 28, 2, 0, 0, 0, ""},
    {"3v49", "0-,4,11+", 3, 4, 3, -2, -1, 2, ""},
    {"3v49", "0-,4+,11+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v50", "0,5,11", 1, 42, 1, 0, 0, 0, ""},
    {"3v50", "0-,5,11+", 3, 11, 2, -2, -1, 2, ""},
    {"3v50", "0-,5-,11+", 2, 4, kNone, -3, -2, kNone, ""},
    {"3v51", "0,6,11", 1, 42, 1, 0, 0, 0, ""},
    {"3v51", "0-,6,11+", 3, 11, 2, -1, -1, 1, ""},
    {"3v51", "0-,6+,11+", 2, 4, kNone, -2, -2, kNone, ""},
    {"3v52", "0,7,11", 1, 28, 2, 0, 0, 0, ""},
    {"3v52", "0-,7,11+", 3, 4, 3, -2, -1, 2, ""},
    {"3v52", "0-,7-,11+", 2, 2, kNone, -3, -2, kNone, ""},
    {"3v53", "0,8,11", 1, 38, 1, 0, 0, 0, ""},
    {"3v53", "0-,8,11+", 3, 9, 2, -2, -1, 2, ""},
    {"3v53", "0-,8-,11+", 2, 8, kNone, -2, -2, kNone, ""},
    {"3v54", "0,9,11", 1, 48, 1, 0, 0, 0, ""},
    {"3v54", "0-,9,11+", 3, 14, 2, -1, -1, 2, ""},
    {"3v54", "0-,9-,11+", 2, 12, kNone, -2, -2, kNone, ""},
    {"3v55", "0,10,11", 1, 56, 0, 0, 0, 0, ""},
    {"3v55", "10-,0,11+", 3, 17, 1, -2, -1, 1, ""},
    {"3v55", "0-,10-,11+", 2, 14, kNone, -3, -2, kNone, ""},
}};

}  // namespace

std::span<const ReferenceRow> ReferenceRows() { return kRows; }

}  // namespace dichotic
