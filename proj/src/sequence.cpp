#include "xband/sequence.hpp"

namespace xband {

SeqView make_view(const Sequence& s, size_t origin, Dir dir, size_t length) {
    if (origin > s.symbols.size())
        throw OutOfRange("view origin " + std::to_string(origin) + " past end of sequence " +
                         std::to_string(s.id));
    size_t room = dir == Dir::Right ? s.symbols.size() - origin : origin;
    if (length > room)
        throw OutOfRange("view length " + std::to_string(length) + " exceeds the " +
                         std::to_string(room) + " symbols available on sequence " +
                         std::to_string(s.id));
    return SeqView{&s, origin, dir, length};
}

char view_at(const SeqView& v, size_t i) {
    if (i >= v.length)
        throw OutOfRange("view index " + std::to_string(i) + " >= length " +
                         std::to_string(v.length));
    return v.at(i);
}

}  // namespace xband
