#ifndef LOCOL_TRACE_HPP
#define LOCOL_TRACE_HPP

#include <functional>

namespace locol {

// Structured events emitted while a colouring is being modified. The CLI
// renders them as line-delimited records under --trace.
struct TraceEvent {
    enum Kind {
        kRotate,     // a = start edge of the shift chain, b = chain length
        kKempeSwap,  // a = first colour, b = second colour, c = edges recoloured
        kChainStep,  // a = step index, b = uncoloured edge, c = chain colour
        kCycleClose, // a = cycle length
        kExtend,     // a = edge coloured, b = colour (1-based)
    } kind;
    int a = -1;
    int b = -1;
    int c = -1;
};

using TraceSink = std::function<void(const TraceEvent&)>;

inline void emit(const TraceSink* sink, TraceEvent ev) {
    if (sink && *sink) (*sink)(ev);
}

}  // namespace locol

#endif
