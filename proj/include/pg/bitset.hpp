/*
 * Copyright 2026 The ppsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pg {

/**
 * Fixed-capacity bit vector over position indices [0, capacity).
 * All iteration is in ascending index order.
 */
class PositionSet {
public:
    PositionSet() = default;

    explicit PositionSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    PositionSet(int capacity, std::initializer_list<int> members)
        : PositionSet(capacity)
    {
        for (int v : members) set(v);
    }

    int capacity() const { return capacity_; }

    bool test(int v) const
    {
        assert(v >= 0 && v < capacity_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void set(int v)
    {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v)
    {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear()
    {
        for (auto& w : words_) w = 0;
    }

    void set_all()
    {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }

    int count() const
    {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    /// First member, or -1 when empty.
    int first() const
    {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// First member strictly greater than v, or -1.
    int next(int v) const
    {
        ++v;
        if (v >= capacity_) return -1;
        size_t i = size_t(v) >> 6;
        uint64_t w = words_[i] & (~uint64_t{0} << (v & 63));
        while (true) {
            if (w) return int(i * 64) + std::countr_zero(w);
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int v = int(i * 64) + std::countr_zero(w);
                fn(v);
                w &= w - 1;
            }
        }
    }

    PositionSet& operator|=(const PositionSet& o)
    {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    PositionSet& operator&=(const PositionSet& o)
    {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    PositionSet& operator-=(const PositionSet& o)
    {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool operator==(const PositionSet& o) const
    {
        return capacity_ == o.capacity_ && words_ == o.words_;
    }

    bool is_subset_of(const PositionSet& o) const
    {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const PositionSet& o) const
    {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    void trim()
    {
        int tail = capacity_ & 63;
        if (tail && !words_.empty())
            words_.back() &= (uint64_t{1} << tail) - 1;
    }

    int capacity_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pg
