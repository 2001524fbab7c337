#include <lzhb/online_index.hpp>

#include <algorithm>
#include <bit>

namespace lzhb {

OnlineIndex::ChildMap::ChildMap(std::size_t expected)
{
    std::size_t cap = 1024;
    while (cap * 7 < expected * 10) cap <<= 1;
    keys_.assign(cap, kEmptyKey);
    values_.assign(cap, 0);
    shift_ = 64 - std::countr_zero(cap);
}

std::size_t OnlineIndex::ChildMap::slot(std::uint64_t key) const
{
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_);
}

std::uint32_t OnlineIndex::ChildMap::find(std::uint32_t node, std::uint16_t symbol) const
{
    const std::uint64_t key = (std::uint64_t{node} << 9) | symbol;
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t s = slot(key);; s = (s + 1) & mask) {
        if (keys_[s] == key) return values_[s];
        if (keys_[s] == kEmptyKey) return kNoNode;
    }
}

void OnlineIndex::ChildMap::set(std::uint32_t node, std::uint16_t symbol, std::uint32_t child)
{
    if ((used_ + 1) * 10 > keys_.size() * 7) grow();
    const std::uint64_t key = (std::uint64_t{node} << 9) | symbol;
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t s = slot(key);; s = (s + 1) & mask) {
        if (keys_[s] == key) {
            values_[s] = child;
            return;
        }
        if (keys_[s] == kEmptyKey) {
            keys_[s] = key;
            values_[s] = child;
            ++used_;
            return;
        }
    }
}

void OnlineIndex::ChildMap::grow()
{
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmptyKey);
    std::vector<std::uint32_t> old_values(values_.size() * 2, 0);
    old_keys.swap(keys_);
    old_values.swap(values_);
    --shift_;
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
        if (old_keys[i] == kEmptyKey) continue;
        std::size_t s = slot(old_keys[i]);
        while (keys_[s] != kEmptyKey) s = (s + 1) & mask;
        keys_[s] = old_keys[i];
        values_[s] = old_values[i];
    }
}

OnlineIndex::OnlineIndex(std::size_t expected_length) : children_(expected_length * 2)
{
    text_.reserve(expected_length);
    start_.reserve(expected_length * 2);
    end_.reserve(expected_length * 2);
    link_.reserve(expected_length * 2);
    leftmost_.reserve(expected_length * 2);
    new_node(0, 0, 0); // root
}

std::uint32_t OnlineIndex::new_node(std::uint32_t start, std::uint32_t end, std::uint32_t leftmost)
{
    start_.push_back(start);
    end_.push_back(end);
    link_.push_back(0);
    leftmost_.push_back(leftmost);
    return static_cast<std::uint32_t>(start_.size() - 1);
}

void OnlineIndex::append(std::uint8_t symbol, bool masked)
{
    if (text_.size() >= kMaxTextLength) throw UsageError("online index: text too long");
    const auto pos = static_cast<std::uint32_t>(text_.size());
    // A masked position is appended as a symbol equal to nothing, itself and
    // other sentinels included. Every pending suffix then ends in a leaf. Those
    // leaves are unreachable by queries and are not materialized, but the
    // splits they cause are, which keeps the suffix links consistent.
    const std::uint16_t c = masked ? kSentinel : symbol;
    text_.push_back(c);
    ++remainder_;
    std::uint32_t last_new = kNoNode;

    while (remainder_ > 0) {
        if (active_length_ == 0) active_edge_ = pos;
        const std::uint16_t edge_symbol = text_[active_edge_];
        const std::uint32_t next = children_.find(active_node_, edge_symbol);
        if (next == kNoNode) {
            if (!masked) children_.set(active_node_, edge_symbol, new_node(pos, kOpenEnd, pos - remainder_ + 1));
            if (last_new != kNoNode) {
                link_[last_new] = active_node_;
                last_new = kNoNode;
            }
        } else {
            const Pos len = edge_length(next);
            if (active_length_ >= len) {
                active_edge_ += len;
                active_length_ -= len;
                active_node_ = next;
                continue;
            }
            if (!masked && text_[start_[next] + active_length_] == c) {
                if (last_new != kNoNode && active_node_ != 0) link_[last_new] = active_node_;
                ++active_length_;
                break;
            }
            const std::uint32_t split = new_node(start_[next], start_[next] + active_length_, leftmost_[next]);
            children_.set(active_node_, edge_symbol, split);
            if (!masked) children_.set(split, c, new_node(pos, kOpenEnd, pos - remainder_ + 1));
            start_[next] += active_length_;
            // Edges that begin with a sentinel can never be matched.
            if (text_[start_[next]] != kSentinel) children_.set(split, text_[start_[next]], next);
            if (last_new != kNoNode) link_[last_new] = split;
            last_new = split;
        }
        --remainder_;
        if (active_node_ == 0 && active_length_ > 0) {
            --active_length_;
            active_edge_ = pos - remainder_ + 1;
        } else if (active_node_ != 0) {
            active_node_ = link_[active_node_];
        }
    }
}

bool OnlineIndex::Cursor::extend(std::uint8_t symbol)
{
    const auto& ix = *index_;
    if (offset_ == 0) {
        const std::uint32_t child = ix.children_.find(node_, symbol);
        if (child == kNoNode) return false;
        next_ = child;
    } else if (ix.text_[ix.start_[next_] + offset_] != symbol) {
        return false;
    }
    ++offset_;
    ++depth_;
    if (offset_ == ix.edge_length(next_)) {
        node_ = next_;
        offset_ = 0;
    }
    return true;
}

OptPos OnlineIndex::Cursor::leftmost() const
{
    if (depth_ == 0) return std::nullopt;
    return index_->leftmost_[offset_ == 0 ? node_ : next_] + 1;
}

OnlineIndex::Match OnlineIndex::prefix_query(std::string_view query) const
{
    Cursor cur{*this};
    for (char ch : query)
        if (!cur.extend(static_cast<std::uint8_t>(ch))) break;
    return Match{cur.length(), cur.leftmost()};
}

} // namespace lzhb
