"""Append-only stores and the broadcast channel contract."""

import threading

from cagecast.service.store import Broadcaster, EventLog, JsonlStore


class TestJsonlStore:
    def test_append_and_read_round_trip(self, tmp_path):
        store = JsonlStore(tmp_path / "x.jsonl")
        store.append({"a": 1})
        store.append({"b": [1, 2]})
        assert store.read_all() == [{"a": 1}, {"b": [1, 2]}]

    def test_missing_file_reads_empty(self, tmp_path):
        assert JsonlStore(tmp_path / "absent.jsonl").read_all() == []


class TestEventLog:
    def test_sequence_numbers_monotone_and_persistent(self, tmp_path):
        path = tmp_path / "events.jsonl"
        log = EventLog(path)
        first = log.append("k", {"x": 1})
        second = log.append("k", {"x": 2})
        assert (first["seq"], second["seq"]) == (1, 2)
        reopened = EventLog(path)
        third = reopened.append("k", {"x": 3})
        assert third["seq"] == 3
        assert [e["seq"] for e in reopened.all()] == [1, 2, 3]

    def test_since_filters_by_sequence(self, tmp_path):
        log = EventLog(tmp_path / "events.jsonl")
        for i in range(5):
            log.append("k", {"i": i})
        assert [e["seq"] for e in log.since(3)] == [4, 5]


class TestBroadcaster:
    def test_every_subscriber_receives_every_event_in_order(self):
        broadcaster = Broadcaster()
        subs = [broadcaster.subscribe() for _ in range(3)]
        for i in range(10):
            broadcaster.publish({"seq": i})
        for sub in subs:
            received = [sub.get(timeout=0.1)["seq"] for _ in range(10)]
            assert received == list(range(10))
            assert not sub.lagged

    def test_slow_subscriber_never_blocks_the_publisher(self):
        broadcaster = Broadcaster(buffer_size=4)
        slow = broadcaster.subscribe()
        fast = broadcaster.subscribe()
        done = threading.Event()

        def publish_many():
            for i in range(100):
                broadcaster.publish({"seq": i})
            done.set()

        thread = threading.Thread(target=publish_many)
        thread.start()
        thread.join(timeout=2.0)
        assert done.is_set(), "publisher blocked on a full subscriber queue"
        # neither queue was drained, so both overflowed: flagged, not blocking
        assert slow.lagged and fast.lagged
        drained = []
        while (item := fast.get(timeout=0.01)) is not None:
            drained.append(item["seq"])
        assert drained == [0, 1, 2, 3]  # the buffered prefix survives, in order

    def test_unsubscribe_stops_delivery(self):
        broadcaster = Broadcaster()
        sub = broadcaster.subscribe()
        broadcaster.unsubscribe(sub)
        broadcaster.publish({"seq": 1})
        assert sub.get(timeout=0.05) is None
