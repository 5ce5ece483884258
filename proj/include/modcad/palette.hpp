#pragma once

// 256-entry colour palette indexed by element colour. Mirrors data/palette.txt.

#include <array>
#include <string_view>

namespace modcad {

inline constexpr std::array<std::string_view, 256> kPalette{{
    "#000000", "#ff0000", "#ffff00", "#00ff00", "#00ffff", "#0000ff", "#ff00ff", "#000000",
    "#808080", "#c0c0c0", "#ff0000", "#ff8080", "#cc0000", "#cc6666", "#990000", "#994c4c",
    "#800000", "#804040", "#4c0000", "#4c2626", "#ff4000", "#ff9f80", "#cc3300", "#cc8066",
    "#992600", "#99604c", "#802000", "#805040", "#4c1300", "#4c3026", "#ff8000", "#ffbf80",
    "#cc6600", "#cc9966", "#994c00", "#99734c", "#804000", "#806040", "#4c2600", "#4c3926",
    "#ffbf00", "#ffdf80", "#cc9900", "#ccb366", "#997300", "#99864c", "#806000", "#807040",
    "#4c3900", "#4c4326", "#ffff00", "#ffff80", "#cccc00", "#cccc66", "#999900", "#99994c",
    "#808000", "#808040", "#4c4c00", "#4c4c26", "#bfff00", "#dfff80", "#99cc00", "#b3cc66",
    "#739900", "#86994c", "#608000", "#708040", "#394c00", "#434c26", "#80ff00", "#bfff80",
    "#66cc00", "#99cc66", "#4c9900", "#73994c", "#408000", "#608040", "#264c00", "#394c26",
    "#40ff00", "#9fff80", "#33cc00", "#80cc66", "#269900", "#60994c", "#208000", "#508040",
    "#134c00", "#304c26", "#00ff00", "#80ff80", "#00cc00", "#66cc66", "#009900", "#4c994c",
    "#008000", "#408040", "#004c00", "#264c26", "#00ff40", "#80ff9f", "#00cc33", "#66cc80",
    "#009926", "#4c9960", "#008020", "#408050", "#004c13", "#264c30", "#00ff80", "#80ffbf",
    "#00cc66", "#66cc99", "#00994c", "#4c9973", "#008040", "#408060", "#004c26", "#264c39",
    "#00ffbf", "#80ffdf", "#00cc99", "#66ccb3", "#009973", "#4c9986", "#008060", "#408070",
    "#004c39", "#264c43", "#00ffff", "#80ffff", "#00cccc", "#66cccc", "#009999", "#4c9999",
    "#008080", "#408080", "#004c4c", "#264c4c", "#00bfff", "#80dfff", "#0099cc", "#66b3cc",
    "#007399", "#4c8699", "#006080", "#407080", "#00394c", "#26434c", "#0080ff", "#80bfff",
    "#0066cc", "#6699cc", "#004c99", "#4c7399", "#004080", "#406080", "#00264c", "#26394c",
    "#0040ff", "#809fff", "#0033cc", "#6680cc", "#002699", "#4c6099", "#002080", "#405080",
    "#00134c", "#26304c", "#0000ff", "#8080ff", "#0000cc", "#6666cc", "#000099", "#4c4c99",
    "#000080", "#404080", "#00004c", "#26264c", "#4000ff", "#9f80ff", "#3300cc", "#8066cc",
    "#260099", "#604c99", "#200080", "#504080", "#13004c", "#30264c", "#8000ff", "#bf80ff",
    "#6600cc", "#9966cc", "#4c0099", "#734c99", "#400080", "#604080", "#26004c", "#39264c",
    "#bf00ff", "#df80ff", "#9900cc", "#b366cc", "#730099", "#864c99", "#600080", "#704080",
    "#39004c", "#43264c", "#ff00ff", "#ff80ff", "#cc00cc", "#cc66cc", "#990099", "#994c99",
    "#800080", "#804080", "#4c004c", "#4c264c", "#ff00bf", "#ff80df", "#cc0099", "#cc66b3",
    "#990073", "#994c86", "#800060", "#804070", "#4c0039", "#4c2643", "#ff0080", "#ff80bf",
    "#cc0066", "#cc6699", "#99004c", "#994c73", "#800040", "#804060", "#4c0026", "#4c2639",
    "#ff0040", "#ff809f", "#cc0033", "#cc6680", "#990026", "#994c60", "#800020", "#804050",
    "#4c0013", "#4c2630", "#333333", "#5c5c5c", "#858585", "#adadad", "#d6d6d6", "#ffffff",
}};

} // namespace modcad
