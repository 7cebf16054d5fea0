var dog = {};
Object.defineProperty(dog, 'name', {
    enumerable: true,
    configurable: false,
    value: 'Pilou',
    writable: false
});

dog.name; // answers 'Pilou'
dog.name = 'another name'; // tries to set a new value
dog.name; // answers 'Pilou'

delete dog.name; // tries to remove the property from the object
dog.name; // answers 'Pilou'
